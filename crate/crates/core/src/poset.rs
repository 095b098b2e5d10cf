//! Finite partially ordered sets stored as dense relation matrices.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// Largest poset whose downsets we enumerate (downsets are packed into a `u64`).
pub const MAX_DOWNSET_POSET: usize = 64;

/// A finite poset. Elements are identified by index; labels are for display only.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    size: usize,
    leq: Vec<bool>,
    labels: Vec<String>,
}

impl Poset {
    /// Builds a poset from a full `size × size` relation matrix (row-major),
    /// checking reflexivity, antisymmetry and transitivity.
    pub fn new(labels: Vec<String>, leq: Vec<bool>) -> Result<Self> {
        let size = labels.len();
        if leq.len() != size * size {
            return Err(Error::InvalidPoset(format!(
                "relation matrix has {} entries, expected {}",
                leq.len(),
                size * size
            )));
        }
        check_unique(&labels)?;
        let p = Poset { size, leq, labels };
        p.check_order()?;
        Ok(p)
    }

    /// Reflexive-transitive closure of a cover relation given by index pairs `(lower, upper)`.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let size = labels.len();
        check_unique(&labels)?;
        let mut leq = vec![false; size * size];
        for i in 0..size {
            leq[i * size + i] = true;
        }
        for &(lo, hi) in covers {
            if lo >= size || hi >= size {
                return Err(Error::InvalidPoset(format!("cover ({lo}, {hi}) out of range")));
            }
            if lo == hi {
                return Err(Error::CycleDetected(labels[lo].clone()));
            }
            leq[lo * size + hi] = true;
        }
        // Warshall
        for k in 0..size {
            for i in 0..size {
                if leq[i * size + k] {
                    for j in 0..size {
                        if leq[k * size + j] {
                            leq[i * size + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..size {
            for j in (i + 1)..size {
                if leq[i * size + j] && leq[j * size + i] {
                    return Err(Error::CycleDetected(labels[i].clone()));
                }
            }
        }
        Ok(Poset { size, leq, labels })
    }

    pub fn chain(n: usize) -> Self {
        let labels = (0..n).map(|i| format!("c{i}")).collect();
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_covers(labels, &covers).expect("chain is a poset")
    }

    pub fn antichain(n: usize) -> Self {
        let labels = (0..n).map(|i| format!("p{i}")).collect();
        Poset::from_covers(labels, &[]).expect("antichain is a poset")
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.size + y]
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn relation(&self) -> &[bool] {
        &self.leq
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Pairs `(x, y)` with `x < y` and nothing strictly between, in index order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.size {
            for y in 0..self.size {
                if self.lt(x, y) && !(0..self.size).any(|z| self.lt(x, z) && self.lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Elements sorted by the number of elements strictly below them, ties by index.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.size).collect();
        order.sort_by_key(|&x| ((0..self.size).filter(|&y| self.lt(y, x)).count(), x));
        order
    }

    /// Componentwise order on `self × other`; pair `(x, y)` gets index `x * other.len() + y`.
    pub fn product(&self, other: &Poset) -> Poset {
        let n = self.size * other.size;
        let mut labels = Vec::with_capacity(n);
        for x in 0..self.size {
            for y in 0..other.size {
                labels.push(format!("({},{})", self.labels[x], other.labels[y]));
            }
        }
        let mut leq = vec![false; n * n];
        for p in 0..n {
            for q in 0..n {
                let (x1, y1) = (p / other.size, p % other.size);
                let (x2, y2) = (q / other.size, q % other.size);
                leq[p * n + q] = self.leq(x1, x2) && other.leq(y1, y2);
            }
        }
        // product labels are unique whenever factor labels are
        Poset { size: n, leq, labels }
    }

    /// The sub-poset on `elements` (in the given order), keeping labels.
    pub fn restrict(&self, elements: &[usize]) -> Poset {
        let n = elements.len();
        let mut leq = vec![false; n * n];
        for (i, &x) in elements.iter().enumerate() {
            for (j, &y) in elements.iter().enumerate() {
                leq[i * n + j] = self.leq(x, y);
            }
        }
        let labels = elements.iter().map(|&x| self.labels[x].clone()).collect();
        Poset { size: n, leq, labels }
    }

    /// Relabels element `x` as position `perm[x]` in the result.
    pub fn permute(&self, perm: &[usize]) -> Poset {
        let n = self.size;
        assert_eq!(perm.len(), n, "permutation length");
        let mut leq = vec![false; n * n];
        let mut labels = vec![String::new(); n];
        for x in 0..n {
            labels[perm[x]] = self.labels[x].clone();
            for y in 0..n {
                leq[perm[x] * n + perm[y]] = self.leq(x, y);
            }
        }
        Poset { size: n, leq, labels }
    }

    /// All downward-closed subsets as bitmasks, in the order produced by a
    /// depth-first include/exclude walk over a linear extension.
    pub fn downsets(&self) -> Result<Vec<u64>> {
        if self.size > MAX_DOWNSET_POSET {
            return Err(Error::BudgetExceeded {
                what: "downset enumeration".into(),
                limit: MAX_DOWNSET_POSET,
            });
        }
        let order = self.linear_extension();
        let below: Vec<u64> = (0..self.size)
            .map(|x| {
                (0..self.size)
                    .filter(|&y| self.lt(y, x))
                    .fold(0u64, |m, y| m | (1 << y))
            })
            .collect();
        let mut out = Vec::new();
        let mut stack = vec![(0usize, 0u64)];
        while let Some((depth, mask)) = stack.pop() {
            if depth == order.len() {
                out.push(mask);
                continue;
            }
            let x = order[depth];
            if below[x] & !mask == 0 {
                stack.push((depth + 1, mask | (1 << x)));
            }
            stack.push((depth + 1, mask));
        }
        Ok(out)
    }

    pub fn is_downset(&self, mask: u64) -> bool {
        (0..self.size).all(|x| mask & (1 << x) == 0 || (0..self.size).all(|y| !self.leq(y, x) || mask & (1 << y) != 0))
    }

    fn check_order(&self) -> Result<()> {
        let n = self.size;
        for x in 0..n {
            if !self.leq(x, x) {
                return Err(Error::InvalidPoset(format!("`{}` ≰ itself", self.labels[x])));
            }
        }
        for x in 0..n {
            for y in 0..n {
                if x != y && self.leq(x, y) && self.leq(y, x) {
                    return Err(Error::InvalidPoset(format!(
                        "antisymmetry fails for `{}`, `{}`",
                        self.labels[x], self.labels[y]
                    )));
                }
                if !self.leq(x, y) {
                    continue;
                }
                for z in 0..n {
                    if self.leq(y, z) && !self.leq(x, z) {
                        return Err(Error::InvalidPoset(format!(
                            "transitivity fails for `{}`, `{}`, `{}`",
                            self.labels[x], self.labels[y], self.labels[z]
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

fn check_unique(labels: &[String]) -> Result<()> {
    let mut seen = HashSet::with_capacity(labels.len());
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}
