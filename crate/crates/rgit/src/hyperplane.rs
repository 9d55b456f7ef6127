//! Hyperplanes and halfspaces with canonical integer normals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::qvec::QVec;
use crate::rat::{sign, Rat};

/// Scales so the normal has coprime integer entries; the offset follows the
/// same (positive) scale factor and may stay rational.
fn canonicalize(normal: &QVec, offset: &Rat) -> (QVec, Rat) {
    let mut lcm = BigInt::one();
    for c in normal.iter() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = normal
        .iter()
        .map(|c| (c * Rat::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut gcd = BigInt::zero();
    for v in &ints {
        gcd = gcd.gcd(v);
    }
    debug_assert!(!gcd.is_zero());
    let scale = Rat::new(lcm, gcd.clone());
    (
        QVec::new(ints.iter().map(|v| Rat::from_integer(v / &gcd)).collect()),
        offset * scale,
    )
}

/// `<normal, x> = offset`; canonical: coprime integer normal with the first
/// nonzero entry positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Hyperplane {
    normal: QVec,
    offset: Rat,
}

impl Hyperplane {
    pub fn new(normal: QVec, offset: Rat) -> Self {
        assert!(!normal.is_zero(), "hyperplane normal must be nonzero");
        let (mut n, mut c) = canonicalize(&normal, &offset);
        let flip = n
            .iter()
            .find(|v| !v.is_zero())
            .map(|v| v.is_negative())
            .unwrap_or(false);
        if flip {
            n = n.neg();
            c = -c;
        }
        Hyperplane { normal: n, offset: c }
    }

    pub fn normal(&self) -> &QVec {
        &self.normal
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }

    /// `<normal, p> - offset`.
    pub fn eval(&self, p: &QVec) -> Rat {
        self.normal.dot(p) - &self.offset
    }

    pub fn contains(&self, p: &QVec) -> bool {
        self.eval(p).is_zero()
    }
}

/// `<normal, x> <= offset`; canonical up to positive scaling, so the
/// halfspace side is preserved.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Halfspace {
    normal: QVec,
    offset: Rat,
}

impl Halfspace {
    pub fn new(normal: QVec, offset: Rat) -> Self {
        assert!(!normal.is_zero(), "halfspace normal must be nonzero");
        let (n, c) = canonicalize(&normal, &offset);
        Halfspace { normal: n, offset: c }
    }

    pub fn normal(&self) -> &QVec {
        &self.normal
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }

    /// Slack `offset - <normal, p>`: nonnegative inside, zero on the
    /// bounding hyperplane.
    pub fn slack(&self, p: &QVec) -> Rat {
        &self.offset - self.normal.dot(p)
    }

    pub fn satisfied_by(&self, p: &QVec) -> bool {
        sign(&self.slack(p)) >= 0
    }

    pub fn active_at(&self, p: &QVec) -> bool {
        self.slack(p).is_zero()
    }

    pub fn boundary(&self) -> Hyperplane {
        Hyperplane::new(self.normal.clone(), self.offset.clone())
    }
}
