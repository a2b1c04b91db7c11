//! Increasing plane trees with bounded out-degree.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::stirling::CoeffTable;

/// An increasing plane tree on `1..n` rooted at `1`; `children[v - 1]` lists
/// the children of `v` from left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneTree {
    children: Vec<Vec<u32>>,
}

impl PlaneTree {
    pub fn root() -> Self {
        PlaneTree {
            children: alloc::vec![Vec::new()],
        }
    }

    pub fn order(&self) -> usize {
        self.children.len()
    }

    pub fn children(&self, v: u32) -> &[u32] {
        &self.children[v as usize - 1]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.children(v).len()
    }

    pub fn max_degree(&self) -> usize {
        self.children.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Out-degree histogram `[#deg0, #deg1, #deg2, #deg3]`; higher degrees
    /// are not counted.
    pub fn degree_histogram(&self) -> [u32; 4] {
        let mut h = [0u32; 4];
        for c in &self.children {
            if let Some(slot) = h.get_mut(c.len()) {
                *slot += 1;
            }
        }
        h
    }

    fn write_subtree(&self, v: u32, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{v}")?;
        let kids = self.children(v);
        if !kids.is_empty() {
            f.write_str("(")?;
            for (i, &c) in kids.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                self.write_subtree(c, f)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_subtree(1, f)
    }
}

/// Calls `visit` on every increasing plane tree on `[n]` whose vertices
/// have at most `max_degree` children. Trees on `[m+1]` arise from trees on
/// `[m]` by attaching `m+1` at each child slot of each non-full vertex.
pub fn visit_trees(n: usize, max_degree: usize, mut visit: impl FnMut(&PlaneTree)) {
    if n == 0 {
        return;
    }
    let mut tree = PlaneTree::root();
    grow(&mut tree, n, max_degree, &mut visit);
}

fn grow(tree: &mut PlaneTree, n: usize, max_degree: usize, visit: &mut impl FnMut(&PlaneTree)) {
    let m = tree.order();
    if m == n {
        visit(tree);
        return;
    }
    let new = m as u32 + 1;
    tree.children.push(Vec::new());
    for v in 0..m {
        let deg = tree.children[v].len();
        if deg >= max_degree {
            continue;
        }
        for slot in 0..=deg {
            tree.children[v].insert(slot, new);
            grow(tree, n, max_degree, visit);
            tree.children[v].remove(slot);
        }
    }
    tree.children.pop();
}

pub fn enumerate_trees(n: usize, max_degree: usize) -> Vec<PlaneTree> {
    let mut out = Vec::new();
    visit_trees(n, max_degree, |t| out.push(t.clone()));
    out
}

/// Number of trees by out-degree histogram `[#deg0, #deg1, #deg2, #deg3]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DegreeCensus {
    pub n: usize,
    pub counts: BTreeMap<[u32; 4], u64>,
}

impl DegreeCensus {
    /// Keyed `(deg1, deg2, deg3)`.
    pub fn as_xi(&self, table_n: usize) -> CoeffTable {
        self.keyed(table_n, |h| (h[1], h[2], h[3]))
    }

    /// Keyed `(deg2, deg1, leaves)`.
    pub fn as_gamma(&self) -> CoeffTable {
        self.keyed(self.n, |h| (h[2], h[1], h[0]))
    }

    /// `counts[i]` = trees with `i` vertices of out-degree two.
    pub fn by_deg2(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for (h, &c) in &self.counts {
            let i = h[2] as usize;
            if out.len() <= i {
                out.resize(i + 1, 0);
            }
            out[i] += c;
        }
        out
    }

    fn keyed(&self, n: usize, key: impl Fn(&[u32; 4]) -> (u32, u32, u32)) -> CoeffTable {
        let mut t = CoeffTable::new(n);
        for (h, &c) in &self.counts {
            t.add(key(h), BigInt::from(c));
        }
        t
    }
}

pub fn degree_census(n: usize, max_degree: usize) -> DegreeCensus {
    let mut census = DegreeCensus {
        n,
        counts: BTreeMap::new(),
    };
    visit_trees(n, max_degree, |t| {
        *census.counts.entry(t.degree_histogram()).or_insert(0) += 1;
    });
    census
}
