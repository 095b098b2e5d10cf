//! Finite lattices and frames.
//!
//! A finite frame is a finite distributive lattice: every subset has a join
//! (the empty join is `0`), and the infinite distributive law reduces to the
//! binary one. Meets and joins are always derived from the order.

use std::collections::HashMap;
use std::ops::Deref;

use crate::error::{Bound, Error, Result};
use crate::poset::Poset;

/// A finite lattice with precomputed meet and join tables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    poset: Poset,
    meet: Vec<u32>,
    join: Vec<u32>,
    bottom: usize,
    top: usize,
}

impl Lattice {
    /// Computes meet/join tables from the order. Fails with the first pair
    /// (in index order) lacking a greatest lower or least upper bound.
    pub fn from_poset(poset: Poset) -> Result<Self> {
        let n = poset.len();
        if n == 0 {
            return Err(Error::InvalidFrame("a lattice has at least one element".into()));
        }
        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        for x in 0..n {
            for y in x..n {
                let m = extremal_bound(&poset, x, y, Bound::Meet).ok_or_else(|| Error::NotALattice {
                    x: poset.label(x).into(),
                    y: poset.label(y).into(),
                    bound: Bound::Meet,
                })?;
                let j = extremal_bound(&poset, x, y, Bound::Join).ok_or_else(|| Error::NotALattice {
                    x: poset.label(x).into(),
                    y: poset.label(y).into(),
                    bound: Bound::Join,
                })?;
                meet[x * n + y] = m as u32;
                meet[y * n + x] = m as u32;
                join[x * n + y] = j as u32;
                join[y * n + x] = j as u32;
            }
        }
        Ok(Self::from_tables(poset, meet, join))
    }

    /// Tables supplied by a construction that guarantees them (downsets,
    /// closure systems). Callers are expected to `validate` the result.
    pub(crate) fn from_tables(poset: Poset, meet: Vec<u32>, join: Vec<u32>) -> Self {
        let n = poset.len();
        let bottom = (0..n).fold(0, |acc, x| meet[acc * n + x] as usize);
        let top = (0..n).fold(0, |acc, x| join[acc * n + x] as usize);
        Lattice {
            poset,
            meet,
            join,
            bottom,
            top,
        }
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn label(&self, x: usize) -> &str {
        self.poset.label(x)
    }

    pub fn labels(&self) -> &[String] {
        self.poset.labels()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.poset.index_of(label)
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.poset.leq(x, y)
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y] as usize
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y] as usize
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Join of any finite family; the empty join is the bottom.
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, xs: I) -> usize {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of any finite family; the empty meet is the top.
    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, xs: I) -> usize {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// `0 = 1`.
    pub fn is_degenerate(&self) -> bool {
        self.bottom == self.top
    }

    pub fn is_chain(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| (0..n).all(|y| self.poset.comparable(x, y)))
    }

    /// First triple `(x, y, z)` in index order with `x ∧ (y ∨ z) ≠ (x ∧ y) ∨ (x ∧ z)`.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                let xy = self.meet(x, y);
                for z in 0..n {
                    if self.meet(x, self.join(y, z)) != self.join(xy, self.meet(x, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// Re-checks the lattice laws against the stored tables.
    pub fn check_laws(&self) -> Result<()> {
        let n = self.len();
        let fail = |msg: String| Err(Error::InvalidFrame(msg));
        for x in 0..n {
            if !self.leq(self.bottom, x) || !self.leq(x, self.top) {
                return fail(format!("`{}` is not between 0 and 1", self.label(x)));
            }
            if self.meet(x, x) != x || self.join(x, x) != x {
                return fail(format!("idempotence fails at `{}`", self.label(x)));
            }
            for y in 0..n {
                let (m, j) = (self.meet(x, y), self.join(x, y));
                if m != self.meet(y, x) || j != self.join(y, x) {
                    return fail(format!("commutativity fails at ({}, {})", self.label(x), self.label(y)));
                }
                if self.join(x, m) != x || self.meet(x, j) != x {
                    return fail(format!("absorption fails at ({}, {})", self.label(x), self.label(y)));
                }
                if (m == x) != self.leq(x, y) {
                    return fail(format!(
                        "meet disagrees with order at ({}, {})",
                        self.label(x),
                        self.label(y)
                    ));
                }
                for z in 0..n {
                    if self.meet(m, z) != self.meet(x, self.meet(y, z))
                        || self.join(j, z) != self.join(x, self.join(y, z))
                    {
                        return fail(format!(
                            "associativity fails at ({}, {}, {})",
                            self.label(x),
                            self.label(y),
                            self.label(z)
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The unique greatest common lower bound (or least common upper bound) of `x`, `y`.
fn extremal_bound(p: &Poset, x: usize, y: usize, bound: Bound) -> Option<usize> {
    let n = p.len();
    let is_bound = |z: usize| match bound {
        Bound::Meet => p.leq(z, x) && p.leq(z, y),
        Bound::Join => p.leq(x, z) && p.leq(y, z),
    };
    let bounds: Vec<usize> = (0..n).filter(|&z| is_bound(z)).collect();
    bounds.iter().copied().find(|&c| {
        bounds.iter().all(|&z| match bound {
            Bound::Meet => p.leq(z, c),
            Bound::Join => p.leq(c, z),
        })
    })
}

/// A finite frame: a lattice whose tables have passed the distributive check.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Frame(Lattice);

impl Deref for Frame {
    type Target = Lattice;

    fn deref(&self) -> &Lattice {
        &self.0
    }
}

impl Frame {
    pub fn from_lattice(lattice: Lattice) -> Result<Self> {
        if let Some((x, y, z)) = lattice.distributivity_witness() {
            return Err(Error::NotDistributive {
                x: lattice.label(x).into(),
                y: lattice.label(y).into(),
                z: lattice.label(z).into(),
            });
        }
        Ok(Frame(lattice))
    }

    /// Full independent validation: lattice laws plus distributivity.
    pub fn validate(&self) -> Result<()> {
        self.0.check_laws()?;
        Frame::from_lattice(self.0.clone()).map(|_| ())
    }

    pub fn lattice(&self) -> &Lattice {
        &self.0
    }

    /// Same frame with element `x` moved to index `perm[x]`.
    pub fn permute(&self, perm: &[usize]) -> Frame {
        let n = self.len();
        let poset = self.poset().permute(perm);
        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                meet[perm[x] * n + perm[y]] = perm[self.meet(x, y)] as u32;
                join[perm[x] * n + perm[y]] = perm[self.join(x, y)] as u32;
            }
        }
        Frame(Lattice::from_tables(poset, meet, join))
    }
}

/// Order → tables → distributivity check.
pub fn lattice_tables(p: Poset) -> Result<Frame> {
    Frame::from_lattice(Lattice::from_poset(p)?)
}

/// Builds a frame from element names and `(lower, upper)` cover pairs.
pub fn frame_from_covers<S: AsRef<str>>(labels: &[S], covers: &[(S, S)]) -> Result<Frame> {
    let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
    let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let lookup = |s: &S| {
        index
            .get(s.as_ref())
            .copied()
            .ok_or_else(|| Error::UnknownLabel(s.as_ref().to_string()))
    };
    let pairs = covers
        .iter()
        .map(|(lo, hi)| Ok((lookup(lo)?, lookup(hi)?)))
        .collect::<Result<Vec<_>>>()?;
    lattice_tables(Poset::from_covers(labels, &pairs)?)
}

/// The frame of downward-closed subsets of `p`, ordered by inclusion.
/// Elements are sorted by (cardinality, bitmask).
pub fn downset_frame(p: &Poset) -> Result<Frame> {
    let mut sets = p.downsets()?;
    sets.sort_by_key(|&m| (m.count_ones(), m));
    let index: HashMap<u64, usize> = sets.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let n = sets.len();
    let labels = sets
        .iter()
        .map(|&m| {
            if m == 0 {
                "∅".to_string()
            } else {
                let names: Vec<&str> = (0..p.len())
                    .filter(|&x| m & (1 << x) != 0)
                    .map(|x| p.label(x))
                    .collect();
                format!("{{{}}}", names.join(","))
            }
        })
        .collect();
    let mut leq = vec![false; n * n];
    let mut meet = vec![0u32; n * n];
    let mut join = vec![0u32; n * n];
    for (i, &a) in sets.iter().enumerate() {
        for (j, &b) in sets.iter().enumerate() {
            leq[i * n + j] = a & !b == 0;
            meet[i * n + j] = index[&(a & b)] as u32;
            join[i * n + j] = index[&(a | b)] as u32;
        }
    }
    let poset = Poset::new(labels, leq)?;
    Ok(Frame(Lattice::from_tables(poset, meet, join)))
}

/// Indices of the join-irreducible elements: nonzero and not the join of the
/// elements strictly below.
pub fn join_irreducible_elements(l: &Lattice) -> Vec<usize> {
    (0..l.len())
        .filter(|&x| x != l.bottom() && l.join_all((0..l.len()).filter(|&y| l.poset().lt(y, x))) != x)
        .collect()
}

pub fn join_irreducibles(l: &Lattice) -> Poset {
    l.poset().restrict(&join_irreducible_elements(l))
}

/// The running examples as named frames.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardFrame {
    /// The terminal frame, `0 = 1`.
    OnePoint,
    /// `{0 < 1}`.
    T,
    /// The Sierpinski frame `{0 < a < 1}`.
    S,
    Chain(usize),
    /// `{0 < a, b < 1}` with `a`, `b` incomparable.
    Diamond,
}

pub fn standard_frame(name: StandardFrame) -> Frame {
    match name {
        StandardFrame::OnePoint => chain(1),
        StandardFrame::T => chain(2),
        StandardFrame::S => chain(3),
        StandardFrame::Chain(n) => chain(n),
        StandardFrame::Diamond => {
            frame_from_covers(&["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
                .expect("diamond is a frame")
        }
    }
}

/// `chain(1)` is the one-point frame, `chain(2)` is `T`, `chain(3)` is `S`.
fn chain(n: usize) -> Frame {
    assert!(n >= 1, "a chain frame needs at least one element");
    let labels: Vec<String> = (0..n)
        .map(|i| {
            if i == 0 {
                "0".to_string()
            } else if i == n - 1 {
                "1".to_string()
            } else if n - 2 <= 26 {
                char::from(b'a' + (i - 1) as u8).to_string()
            } else {
                format!("x{i}")
            }
        })
        .collect();
    let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    lattice_tables(Poset::from_covers(labels, &covers).expect("chain")).expect("chains are frames")
}
