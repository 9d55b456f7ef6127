//! Set partitions of `{0..m-1}`: the coincidence data of a configuration of
//! labeled points. Canonical order everywhere is the restricted-growth-string
//! order, which keeps classification tables reproducible.

use std::fmt;

use crate::error::{Error, Result};

/// A partition of `{0..m-1}` into disjoint blocks. Blocks are sorted by
/// their minimum element and internally ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    m: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(m: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; m];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidInput("empty partition block".to_string()));
            }
            b.sort_unstable();
            for &i in b.iter() {
                if i >= m || seen[i] {
                    return Err(Error::InvalidInput(format!(
                        "partition does not cover 0..{m} exactly once"
                    )));
                }
                seen[i] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::InvalidInput(format!(
                "partition does not cover 0..{m}"
            )));
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { m, blocks })
    }

    /// The all-singletons partition.
    pub fn discrete(m: usize) -> Self {
        SetPartition {
            m,
            blocks: (0..m).map(|i| vec![i]).collect(),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Restricted growth string: `rgs[i]` is the block label of element `i`,
    /// labels appearing in first-use order.
    pub fn to_rgs(&self) -> Vec<usize> {
        let mut rgs = vec![0; self.m];
        for (label, block) in self.blocks.iter().enumerate() {
            for &i in block {
                rgs[i] = label;
            }
        }
        rgs
    }

    pub fn from_rgs(rgs: &[usize]) -> Self {
        let m = rgs.len();
        let nblocks = rgs.iter().copied().max().map_or(0, |x| x + 1);
        let mut blocks = vec![Vec::new(); nblocks];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i);
        }
        SetPartition { m, blocks }
    }

    /// True when every block of `self` is contained in a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        let rgs = other.to_rgs();
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&i| rgs[i] == rgs[b[0]]))
    }

    /// Relabels elements: element `i` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> SetPartition {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&i| perm[i]).collect())
            .collect();
        SetPartition::new(self.m, blocks).expect("permutation preserves partition validity")
    }

    /// Forgets element `drop`, relabeling the remaining elements by their
    /// order: the image under the forgetful map.
    pub fn forget(&self, drop: usize) -> SetPartition {
        let relabel = |i: usize| if i < drop { i } else { i - 1 };
        let blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .filter_map(|b| {
                let nb: Vec<usize> = b
                    .iter()
                    .filter(|&&i| i != drop)
                    .map(|&i| relabel(i))
                    .collect();
                (!nb.is_empty()).then_some(nb)
            })
            .collect();
        SetPartition::new(self.m - 1, blocks).expect("forgetting keeps a valid partition")
    }

    /// Parses `"12|3|4"` over 1-based single-digit labels (m <= 9).
    pub fn parse(s: &str, m: usize) -> Result<Self> {
        if m > 9 {
            return Err(Error::InvalidInput(
                "digit-string partitions need m <= 9; pass JSON arrays instead".to_string(),
            ));
        }
        let mut blocks = Vec::new();
        for part in s.split('|') {
            let mut block = Vec::new();
            for ch in part.trim().chars() {
                let d = ch
                    .to_digit(10)
                    .ok_or_else(|| Error::InvalidInput(format!("bad label `{ch}`")))?
                    as usize;
                if d == 0 || d > m {
                    return Err(Error::InvalidInput(format!("label {d} out of 1..={m}")));
                }
                block.push(d - 1);
            }
            if !block.is_empty() {
                blocks.push(block);
            }
        }
        SetPartition::new(m, blocks)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|i| (i + 1).to_string()).collect::<String>())
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// All partitions of `{0..m-1}` in restricted-growth-string order.
pub fn all_partitions(m: usize) -> Vec<SetPartition> {
    assert!(m >= 1);
    let mut out = Vec::new();
    let mut rgs = vec![0usize; m];
    loop {
        out.push(SetPartition::from_rgs(&rgs));
        // lexicographic successor
        let mut j = m;
        let mut advanced = false;
        while j > 1 {
            j -= 1;
            let prefix_max = rgs[..j].iter().copied().max().unwrap_or(0);
            if rgs[j] <= prefix_max {
                rgs[j] += 1;
                rgs[j + 1..m].fill(0);
                advanced = true;
                break;
            }
        }
        if !advanced {
            break;
        }
    }
    out
}
