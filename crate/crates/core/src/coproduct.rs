//! Binary coproducts of finite frames.
//!
//! `A + B` is realised as the frame of C-ideals of `A × B`: subsets that are
//! downward closed and closed under coordinatewise joins (with the empty join
//! forcing every `(0, y)` and `(x, 0)`). The tensor `x ⊗ y` is the C-ideal
//! generated by `(x, y)`, and every element is a join of tensors.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::frame::{Frame, Lattice};
use crate::map::{same_frame, FrameMap};
use crate::poset::Poset;

pub const DEFAULT_BUDGET: usize = 4096;

/// A subset of `A × B`; pair `(x, y)` is bit `x * |B| + y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairSet {
    words: Vec<u64>,
}

impl PairSet {
    pub fn empty(bits: usize) -> Self {
        PairSet {
            words: vec![0; bits.div_ceil(64)],
        }
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Returns whether the bit was newly set.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let w = &mut self.words[i / 64];
        let mask = 1u64 << (i % 64);
        let fresh = *w & mask == 0;
        *w |= mask;
        fresh
    }

    pub fn union(&self, other: &PairSet) -> PairSet {
        PairSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn intersection(&self, other: &PairSet) -> PairSet {
        PairSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn is_subset(&self, other: &PairSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(wi, &w)| (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| wi * 64 + b))
    }
}

impl Ord for PairSet {
    /// Numeric value of the bitset.
    fn cmp(&self, other: &Self) -> Ordering {
        self.words.iter().rev().cmp(other.words.iter().rev())
    }
}

impl PartialOrd for PairSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Least C-ideal of `a × b` containing `seed`.
///
/// Alternates column and row passes: each column `{x : (x, y) ∈ D}` is replaced
/// by the principal downset of its join, and likewise for rows, until nothing
/// changes. Together the passes give downward closure and join closure.
pub fn c_ideal_close(a: &Frame, b: &Frame, seed: &PairSet) -> PairSet {
    let (na, nb) = (a.len(), b.len());
    let mut d = seed.clone();
    for x in 0..na {
        d.insert(x * nb + b.bottom());
    }
    for y in 0..nb {
        d.insert(a.bottom() * nb + y);
    }
    loop {
        let mut changed = false;
        for y in 0..nb {
            let top = a.join_all((0..na).filter(|&x| d.contains(x * nb + y)));
            for x in (0..na).filter(|&x| a.leq(x, top)) {
                changed |= d.insert(x * nb + y);
            }
        }
        for x in 0..na {
            let top = b.join_all((0..nb).filter(|&y| d.contains(x * nb + y)));
            for y in (0..nb).filter(|&y| b.leq(y, top)) {
                changed |= d.insert(x * nb + y);
            }
        }
        if !changed {
            return d;
        }
    }
}

/// `A + B` with its tensor table.
#[derive(Debug, Clone)]
pub struct CoproductFrame {
    left: Arc<Frame>,
    right: Arc<Frame>,
    elements: Vec<PairSet>,
    frame: Arc<Frame>,
    tensor_index: Vec<usize>,
    index: HashMap<PairSet, usize>,
}

pub fn coproduct(a: &Arc<Frame>, b: &Arc<Frame>, budget: usize) -> Result<CoproductFrame> {
    let (na, nb) = (a.len(), b.len());
    let bits = na * nb;
    let tensors: Vec<PairSet> = (0..bits)
        .map(|p| {
            let mut seed = PairSet::empty(bits);
            seed.insert(p);
            c_ideal_close(a, b, &seed)
        })
        .collect();
    let mut generators = tensors.clone();
    generators.sort();
    generators.dedup();

    // joins of tensors, breadth first from the empty join
    let bottom = c_ideal_close(a, b, &PairSet::empty(bits));
    let mut seen: HashSet<PairSet> = HashSet::new();
    seen.insert(bottom.clone());
    let mut queue = VecDeque::from([bottom]);
    while let Some(d) = queue.pop_front() {
        for t in &generators {
            if t.is_subset(&d) {
                continue;
            }
            let e = c_ideal_close(a, b, &d.union(t));
            if !seen.contains(&e) {
                if seen.len() >= budget {
                    return Err(Error::BudgetExceeded {
                        what: format!("coproduct of {na}- and {nb}-element frames"),
                        limit: budget,
                    });
                }
                seen.insert(e.clone());
                queue.push_back(e);
            }
        }
    }
    let mut elements: Vec<PairSet> = seen.into_iter().collect();
    elements.sort();
    let index: HashMap<PairSet, usize> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let tensor_index: Vec<usize> = tensors.iter().map(|t| index[t]).collect();

    let n = elements.len();
    let mut labels: Vec<Option<String>> = vec![None; n];
    for (p, &e) in tensor_index.iter().enumerate() {
        if labels[e].is_none() {
            labels[e] = Some(format!("{}⊗{}", a.label(p / nb), b.label(p % nb)));
        }
    }
    let mut used = HashSet::new();
    let labels: Vec<String> = labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| match l {
            Some(l) if used.insert(l.clone()) => l,
            _ => {
                let l = format!("e{i}");
                used.insert(l.clone());
                l
            }
        })
        .collect();

    let mut leq = vec![false; n * n];
    let mut meet = vec![0u32; n * n];
    let mut join = vec![0u32; n * n];
    for i in 0..n {
        for j in i..n {
            let (x, y) = (&elements[i], &elements[j]);
            leq[i * n + j] = x.is_subset(y);
            leq[j * n + i] = y.is_subset(x);
            // C-ideals are closed under intersection; unions need closing
            let m = index[&x.intersection(y)] as u32;
            let jn = index[&c_ideal_close(a, b, &x.union(y))] as u32;
            meet[i * n + j] = m;
            meet[j * n + i] = m;
            join[i * n + j] = jn;
            join[j * n + i] = jn;
        }
    }
    let frame = Frame::from_lattice(Lattice::from_tables(Poset::new(labels, leq)?, meet, join))?;
    Ok(CoproductFrame {
        left: a.clone(),
        right: b.clone(),
        elements,
        frame: Arc::new(frame),
        tensor_index,
        index,
    })
}

impl CoproductFrame {
    pub fn left(&self) -> &Arc<Frame> {
        &self.left
    }

    pub fn right(&self) -> &Arc<Frame> {
        &self.right
    }

    pub fn frame(&self) -> &Arc<Frame> {
        &self.frame
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PairSet] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &PairSet {
        &self.elements[i]
    }

    /// Index of a closed set, if it is an element.
    pub fn index_of(&self, set: &PairSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    /// Element index of `x ⊗ y`.
    pub fn tensor(&self, x: usize, y: usize) -> usize {
        self.tensor_index[x * self.right.len() + y]
    }

    /// Pairs `(x, y)` contained in element `i`.
    pub fn pairs(&self, i: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        let nb = self.right.len();
        self.elements[i].iter().map(move |p| (p / nb, p % nb))
    }

    /// `i: a ↦ a ⊗ 1` and `j: b ↦ 1 ⊗ b`.
    pub fn injections(&self) -> (FrameMap, FrameMap) {
        let i = (0..self.left.len()).map(|x| self.tensor(x, self.right.top())).collect();
        let j = (0..self.right.len()).map(|y| self.tensor(self.left.top(), y)).collect();
        (
            FrameMap::new(self.left.clone(), self.frame.clone(), i).expect("left injection is a frame map"),
            FrameMap::new(self.right.clone(), self.frame.clone(), j).expect("right injection is a frame map"),
        )
    }

    /// The unique `h: A + B → C` with `h ∘ i = f` and `h ∘ j = g`:
    /// `D ↦ ⋁ { f(x) ∧ g(y) : (x, y) ∈ D }`.
    pub fn mediate(&self, f: &FrameMap, g: &FrameMap) -> Result<FrameMap> {
        if !same_frame(f.source(), &self.left) || !same_frame(g.source(), &self.right) {
            return Err(Error::Mismatch(
                "mediating arrows must start at the coproduct factors".into(),
            ));
        }
        if !same_frame(f.target(), g.target()) {
            return Err(Error::Mismatch("mediating arrows must share a target".into()));
        }
        let c = f.target();
        let image = (0..self.len())
            .map(|i| c.join_all(self.pairs(i).map(|(x, y)| c.meet(f.apply(x), g.apply(y)))))
            .collect();
        FrameMap::new(self.frame.clone(), c.clone(), image)
    }

    /// Text dump: element count, tensor table, Hasse edges.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let f = &self.frame;
        let _ = writeln!(out, "elements: {}", self.len());
        for (i, e) in self.elements.iter().enumerate() {
            let pairs: Vec<String> = self
                .pairs(i)
                .map(|(x, y)| format!("({},{})", self.left.label(x), self.right.label(y)))
                .collect();
            let _ = writeln!(out, "e{i} {} = {{{}}}", f.label(i), pairs.join(" "));
            debug_assert_eq!(e.len(), pairs.len());
        }
        out.push_str("tensors:\n");
        for x in 0..self.left.len() {
            for y in 0..self.right.len() {
                let _ = writeln!(
                    out,
                    "({},{}) -> e{}",
                    self.left.label(x),
                    self.right.label(y),
                    self.tensor(x, y)
                );
            }
        }
        out.push_str("hasse:\n");
        for (lo, hi) in f.poset().covers() {
            let _ = writeln!(out, "e{lo} -> e{hi}");
        }
        out
    }
}

/// `∇: L + L → L`, the mediating arrow of two identities.
pub fn codiagonal(cp: &CoproductFrame) -> Result<FrameMap> {
    if !same_frame(&cp.left, &cp.right) {
        return Err(Error::Mismatch(
            "codiagonal needs a coproduct of a frame with itself".into(),
        ));
    }
    let id = FrameMap::identity(cp.left.clone());
    cp.mediate(&id, &id)
}

/// `f + g: A + A' → B + B'`, sending `α ⊗ β` to `f(α) ⊗ g(β)` and extended by joins.
pub fn sum_of_maps(f: &FrameMap, g: &FrameMap, source: &CoproductFrame, target: &CoproductFrame) -> Result<FrameMap> {
    if !same_frame(f.source(), &source.left) || !same_frame(g.source(), &source.right) {
        return Err(Error::Mismatch(
            "sum: source coproduct does not match the arrows".into(),
        ));
    }
    if !same_frame(f.target(), &target.left) || !same_frame(g.target(), &target.right) {
        return Err(Error::Mismatch(
            "sum: target coproduct does not match the arrows".into(),
        ));
    }
    let t = &target.frame;
    let image = (0..source.len())
        .map(|i| t.join_all(source.pairs(i).map(|(x, y)| target.tensor(f.apply(x), g.apply(y)))))
        .collect();
    FrameMap::new(source.frame.clone(), t.clone(), image)
}

/// Whether `∇ ∘ (f + g)` agrees with `f` along the diagonal tensors `x ⊗ x`.
/// `(f + g)(x ⊗ x) = f(x) ⊗ g(x)` and `∇` sends that to `f(x) ∧ g(x)`, so the
/// answer is exactly `f ≤ g` pointwise.
pub fn order_by_codiagonal_with(
    f: &FrameMap,
    g: &FrameMap,
    source: &CoproductFrame,
    target: &CoproductFrame,
    nabla: &FrameMap,
) -> Result<bool> {
    if !same_frame(f.source(), g.source()) || !same_frame(f.target(), g.target()) {
        return Err(Error::Mismatch("arrows are not parallel".into()));
    }
    let composite = nabla.after(&sum_of_maps(f, g, source, target)?)?;
    Ok((0..f.source().len()).all(|x| composite.apply(source.tensor(x, x)) == f.apply(x)))
}

/// Builds `K + K`, `L + L` and `∇_L`, then decides `∇ ∘ (f + g) = f`.
pub fn order_by_codiagonal(f: &FrameMap, g: &FrameMap, budget: usize) -> Result<bool> {
    let source = coproduct(f.source(), f.source(), budget)?;
    let target = coproduct(f.target(), f.target(), budget)?;
    let nabla = codiagonal(&target)?;
    order_by_codiagonal_with(f, g, &source, &target, &nabla)
}
