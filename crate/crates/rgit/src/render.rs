//! Static SVG rendering of 2-plane slices through the m = 4 effective
//! polytope, with wall traces and chamber signature labels. Output is
//! byte-stable: exact decimal coordinates, sorted elements, no timestamps.

use num_traits::Zero;

use crate::chambers::{locate, walls, Wall};
use crate::error::{Error, Result};
use crate::hull::dd_vertices;
use crate::linalg::rank_of;
use crate::lp::{strict_witness, Constraint};
use crate::qvec::QVec;
use crate::rat::{rat, rat_to_decimal, sign, Rat};
use crate::stability::WeightVector;

/// A 2-plane `center + u dir1 + v dir2` inside the `sum = 2` slice of R^4.
#[derive(Clone, Debug)]
pub struct SliceSpec {
    pub center: QVec,
    pub dir1: QVec,
    pub dir2: QVec,
}

impl SliceSpec {
    pub fn new(center: QVec, dir1: QVec, dir2: QVec) -> Result<Self> {
        for v in [&center, &dir1, &dir2] {
            v.check_dim(4)?;
        }
        if center.coord_sum() != rat(2) {
            return Err(Error::InvalidInput(
                "slice center must lie on the sum = 2 slice".to_string(),
            ));
        }
        if !dir1.coord_sum().is_zero() || !dir2.coord_sum().is_zero() {
            return Err(Error::DegenerateSlice);
        }
        if rank_of(&[dir1.clone(), dir2.clone()]) != 2 {
            return Err(Error::DegenerateSlice);
        }
        Ok(SliceSpec { center, dir1, dir2 })
    }

    fn point(&self, u: &Rat, v: &Rat) -> QVec {
        self.center
            .add(&self.dir1.scale(u))
            .add(&self.dir2.scale(v))
    }
}

struct PlanarLine {
    wall: Wall,
    /// a*u + b*v = c
    a: Rat,
    b: Rat,
    c: Rat,
}

/// Renders the slice section of the m = 4 effective polytope: section
/// outline, relevant-wall traces, and chamber labels located by exact
/// witnesses. Errors when the slice misses the polytope or the section is
/// not two-dimensional.
pub fn render_slice(spec: &SliceSpec) -> Result<String> {
    // section polygon in (u, v): 0 <= center_i + u d1_i + v d2_i <= 1
    let mut halfspaces: Vec<(QVec, Rat)> = Vec::new();
    let mut constraints: Vec<Constraint> = Vec::new();
    for i in 0..4 {
        let row = QVec::new(vec![spec.dir1[i].clone(), spec.dir2[i].clone()]);
        if row.is_zero() {
            if sign(&spec.center[i]) < 0 || spec.center[i] > rat(1) {
                return Err(Error::InvalidInput(
                    "slice misses the effective polytope".to_string(),
                ));
            }
            continue;
        }
        halfspaces.push((row.neg(), spec.center[i].clone()));
        halfspaces.push((row.clone(), rat(1) - &spec.center[i]));
        constraints.push(Constraint::ge(row.clone(), -spec.center[i].clone()));
        constraints.push(Constraint::le(row, rat(1) - &spec.center[i]));
    }
    let mut section = dd_vertices(2, &halfspaces)?;
    if section.is_empty() {
        return Err(Error::InvalidInput(
            "slice misses the effective polytope".to_string(),
        ));
    }
    if section.len() < 3 {
        return Err(Error::DegenerateSlice);
    }
    sort_counterclockwise(&mut section);

    // wall traces in the (u, v) plane
    let rel_walls: Vec<Wall> = walls(4, 2)?
        .into_iter()
        .filter(|w| w.is_relevant())
        .collect();
    let mut lines: Vec<PlanarLine> = Vec::new();
    let mut containing: Vec<Wall> = Vec::new();
    for w in rel_walls {
        let coeffs = w.coefficients(4);
        let a = coeffs.dot(&spec.dir1);
        let b = coeffs.dot(&spec.dir2);
        let c = rat(i64::from(w.level())) - coeffs.dot(&spec.center);
        if a.is_zero() && b.is_zero() {
            if c.is_zero() {
                containing.push(w);
            }
            continue;
        }
        lines.push(PlanarLine { wall: w, a, b, c });
    }

    let mut traces: Vec<(String, [QVec; 2])> = Vec::new();
    for line in &lines {
        if let Some(seg) = clip_line_to_polygon(line, &section) {
            traces.push((line.wall.key(), seg));
        }
    }
    traces.sort_by(|x, y| x.0.cmp(&y.0));

    // chamber labels: one witness per feasible sign vector over the traces
    let mut labels: Vec<(String, QVec)> = Vec::new();
    for mask in 0u32..(1 << lines.len()) {
        let mut strict = constraints.clone();
        for (j, line) in lines.iter().enumerate() {
            let coeffs = QVec::new(vec![line.a.clone(), line.b.clone()]);
            strict.push(if mask & (1 << j) != 0 {
                Constraint::ge(coeffs, line.c.clone())
            } else {
                Constraint::le(coeffs, line.c.clone())
            });
        }
        if let Some(w) = strict_witness(2, &strict, &[])? {
            let alpha = spec.point(&w[0], &w[1]);
            let wv = WeightVector::new(alpha, 2).expect("slice stays on the sum slice");
            let (sig, _) = locate(&wv)?;
            let text: String = sig
                .signs()
                .values()
                .map(|&s| match s {
                    1 => '+',
                    -1 => '-',
                    _ => '0',
                })
                .collect();
            labels.push((text, w));
        }
    }
    labels.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)));
    labels.dedup_by(|a, b| a.0 == b.0);

    Ok(assemble_svg(&section, &traces, &labels, &containing))
}

/// Counterclockwise order around the centroid, starting at the
/// lexicographically smallest vertex; exact sign comparisons only.
fn sort_counterclockwise(points: &mut [QVec]) {
    let n = rat(points.len() as i64);
    let mut c = QVec::zero(2);
    for p in points.iter() {
        c = c.add(p);
    }
    c = c.scale(&(rat(1) / n));
    let half = |d: &QVec| -> u8 {
        if sign(&d[1]) > 0 || (d[1].is_zero() && sign(&d[0]) > 0) {
            0
        } else {
            1
        }
    };
    points.sort_by(|p, q| {
        let dp = p.sub(&c);
        let dq = q.sub(&c);
        half(&dp).cmp(&half(&dq)).then_with(|| {
            let cross = &dp[0] * &dq[1] - &dp[1] * &dq[0];
            sign(&cross).cmp(&0).reverse()
        })
    });
    let start = points
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.cmp(b.1))
        .map(|(i, _)| i)
        .unwrap_or(0);
    points.rotate_left(start);
}

fn clip_line_to_polygon(line: &PlanarLine, polygon: &[QVec]) -> Option<[QVec; 2]> {
    let eval = |p: &QVec| -> Rat { &line.a * &p[0] + &line.b * &p[1] - &line.c };
    let mut hits: Vec<QVec> = Vec::new();
    let k = polygon.len();
    for i in 0..k {
        let p = &polygon[i];
        let q = &polygon[(i + 1) % k];
        let sp = eval(p);
        let sq = eval(q);
        match (sign(&sp), sign(&sq)) {
            (0, _) => hits.push(p.clone()),
            (a, b) if a * b < 0 => {
                let t = &sp / (&sp - &sq);
                hits.push(p.add(&q.sub(p).scale(&t)));
            }
            _ => {}
        }
    }
    hits.sort();
    hits.dedup();
    if hits.len() < 2 {
        return None;
    }
    // extremes along the line direction (-b, a)
    let dir = QVec::new(vec![-line.b.clone(), line.a.clone()]);
    let (lo, hi) = hits
        .iter()
        .map(|h| (h.dot(&dir), h.clone()))
        .fold(None::<((Rat, QVec), (Rat, QVec))>, |acc, item| {
            Some(match acc {
                None => (item.clone(), item),
                Some((lo, hi)) => (
                    if item.0 < lo.0 { item.clone() } else { lo },
                    if item.0 > hi.0 { item } else { hi },
                ),
            })
        })
        .expect("at least two hits");
    Some([lo.1, hi.1])
}

fn assemble_svg(
    section: &[QVec],
    traces: &[(String, [QVec; 2])],
    labels: &[(String, QVec)],
    containing: &[Wall],
) -> String {
    // bounding box in (u, v)
    let mut min = [section[0][0].clone(), section[0][1].clone()];
    let mut max = min.clone();
    for p in section {
        for d in 0..2 {
            if p[d] < min[d] {
                min[d] = p[d].clone();
            }
            if p[d] > max[d] {
                max[d] = p[d].clone();
            }
        }
    }
    let size = rat(560);
    let margin = rat(20);
    let spanu = &max[0] - &min[0];
    let spanv = &max[1] - &min[1];
    let span = if spanu > spanv { spanu } else { spanv };
    let map = |p: &QVec| -> (String, String) {
        let x = (&p[0] - &min[0]) / &span * &size + &margin;
        let y = (&p[1] - &min[1]) / &span * &size;
        let y = &size + &margin - y; // flip so v grows upward
        (rat_to_decimal(&x, 4), rat_to_decimal(&y, 4))
    };

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    svg.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 600 600\">\n",
    );
    for w in containing {
        svg.push_str(&format!(
            "  <!-- slice plane lies inside wall {} -->\n",
            w.key()
        ));
    }
    let pts: Vec<String> = section
        .iter()
        .map(|p| {
            let (x, y) = map(p);
            format!("{x},{y}")
        })
        .collect();
    svg.push_str(&format!(
        "  <polygon points=\"{}\" fill=\"#f4f1ea\" stroke=\"#333333\" stroke-width=\"2\"/>\n",
        pts.join(" ")
    ));
    for (key, seg) in traces {
        let (x1, y1) = map(&seg[0]);
        let (x2, y2) = map(&seg[1]);
        svg.push_str(&format!(
            "  <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"#b03030\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\"/>\n",
        ));
        svg.push_str(&format!(
            "  <text x=\"{x2}\" y=\"{y2}\" font-family=\"monospace\" font-size=\"12\" fill=\"#b03030\">W{key}</text>\n",
        ));
    }
    for (text, at) in labels {
        let (x, y) = map(at);
        svg.push_str(&format!(
            "  <text x=\"{x}\" y=\"{y}\" font-family=\"monospace\" font-size=\"14\" fill=\"#205080\" text-anchor=\"middle\">{text}</text>\n",
        ));
    }
    svg.push_str("</svg>\n");
    svg
}
