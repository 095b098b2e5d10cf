//! Hom-sets between finite frames: enumeration, points, endomorphisms,
//! automorphisms, the pointwise order, reconstruction of a frame from its
//! arrows out of the Sierpinski frame, and separation by a candidate generator.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::frame::{lattice_tables, standard_frame, Frame, StandardFrame};
use crate::map::{same_frame, FrameMap};
use crate::poset::Poset;

/// All frame maps `source → target` with their pointwise order.
#[derive(Debug, Clone)]
pub struct HomSet {
    source: Arc<Frame>,
    target: Arc<Frame>,
    maps: Vec<FrameMap>,
    order: Vec<bool>,
}

impl HomSet {
    pub fn source(&self) -> &Arc<Frame> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Frame> {
        &self.target
    }

    pub fn maps(&self) -> &[FrameMap] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// `maps[i] ≤ maps[j]` pointwise.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.order[i * self.maps.len() + j]
    }

    pub fn order(&self) -> &[bool] {
        &self.order
    }

    /// Keeps only the maps satisfying `keep`, recomputing the order.
    pub fn filter(&self, keep: impl Fn(&FrameMap) -> bool) -> HomSet {
        let maps: Vec<FrameMap> = self.maps.iter().filter(|m| keep(m)).cloned().collect();
        let order = hom_order(&maps);
        HomSet {
            source: self.source.clone(),
            target: self.target.clone(),
            maps,
            order,
        }
    }

    /// Deterministic text listing: one `map_i:` line per map, then the order matrix.
    pub fn report(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "homs: {} -> {} elements, {} maps",
            self.source.len(),
            self.target.len(),
            self.maps.len()
        );
        for (i, m) in self.maps.iter().enumerate() {
            let _ = writeln!(out, "map_{i}: {m}");
        }
        out.push_str("order:\n");
        for i in 0..self.maps.len() {
            let row: Vec<&str> = (0..self.maps.len())
                .map(|j| if self.leq(i, j) { "1" } else { "0" })
                .collect();
            let _ = writeln!(out, "map_{i}: {}", row.join(" "));
        }
        out
    }
}

/// Raw images of every frame map `k → l`, in search order.
///
/// Elements of `k` are assigned along a fixed linear extension, candidates in
/// ascending index order. Every meet/join equation `h(u ∘ v) = h(u) ∘ h(v)` is
/// checked at the first step where `u`, `v` and `u ∘ v` are all assigned; for
/// comparable `u ≤ v` the meet equation is exactly monotonicity.
pub fn hom_images(k: &Frame, l: &Frame) -> Vec<Vec<usize>> {
    let n = k.len();
    let order = k.poset().linear_extension();
    let mut pos = vec![0; n];
    for (i, &x) in order.iter().enumerate() {
        pos[x] = i;
    }
    let mut checks: Vec<Vec<Check>> = vec![Vec::new(); n];
    for u in 0..n {
        for v in (u + 1)..n {
            for (w, meet) in [(k.meet(u, v), true), (k.join(u, v), false)] {
                let step = pos[u].max(pos[v]).max(pos[w]);
                checks[step].push(Check { u, v, w, meet });
            }
        }
    }
    let mut search = Search {
        k,
        l,
        order: &order,
        checks: &checks,
        image: vec![usize::MAX; n],
        out: Vec::new(),
    };
    search.step(0);
    search.out
}

#[derive(Clone, Copy)]
struct Check {
    u: usize,
    v: usize,
    w: usize,
    meet: bool,
}

struct Search<'a> {
    k: &'a Frame,
    l: &'a Frame,
    order: &'a [usize],
    checks: &'a [Vec<Check>],
    image: Vec<usize>,
    out: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn step(&mut self, depth: usize) {
        if depth == self.order.len() {
            self.out.push(self.image.clone());
            return;
        }
        let x = self.order[depth];
        let candidates: Vec<usize> = match (x == self.k.bottom(), x == self.k.top()) {
            (true, true) if self.l.is_degenerate() => vec![self.l.bottom()],
            (true, true) => Vec::new(),
            (true, false) => vec![self.l.bottom()],
            (false, true) => vec![self.l.top()],
            (false, false) => (0..self.l.len()).collect(),
        };
        for y in candidates {
            self.image[x] = y;
            if self.consistent(depth) {
                self.step(depth + 1);
            }
        }
        self.image[x] = usize::MAX;
    }

    fn consistent(&self, depth: usize) -> bool {
        self.checks[depth].iter().all(|c| {
            let (iu, iv) = (self.image[c.u], self.image[c.v]);
            let expected = if c.meet {
                self.l.meet(iu, iv)
            } else {
                self.l.join(iu, iv)
            };
            self.image[c.w] == expected
        })
    }
}

pub fn enumerate_homs(source: &Arc<Frame>, target: &Arc<Frame>) -> HomSet {
    let maps: Vec<FrameMap> = hom_images(source, target)
        .into_iter()
        .map(|img| FrameMap::new_unchecked(source.clone(), target.clone(), img))
        .collect();
    let order = hom_order(&maps);
    HomSet {
        source: source.clone(),
        target: target.clone(),
        maps,
        order,
    }
}

/// Pointwise order: `p ≤ q` iff `p(x) ≤ q(x)` for every `x`.
pub fn hom_order(maps: &[FrameMap]) -> Vec<bool> {
    let n = maps.len();
    let mut order = vec![false; n * n];
    for (i, p) in maps.iter().enumerate() {
        for (j, q) in maps.iter().enumerate() {
            let target = p.target();
            order[i * n + j] = p.image().iter().zip(q.image()).all(|(&a, &b)| target.leq(a, b));
        }
    }
    order
}

/// The two-element frame `{0 < 1}`.
pub fn two() -> Arc<Frame> {
    Arc::new(standard_frame(StandardFrame::T))
}

pub fn sierpinski() -> Arc<Frame> {
    Arc::new(standard_frame(StandardFrame::S))
}

/// Points of `l`, realised as frame maps `l → T`.
pub fn points(l: &Arc<Frame>) -> HomSet {
    enumerate_homs(l, &two())
}

pub fn endomorphisms(l: &Arc<Frame>) -> HomSet {
    enumerate_homs(l, l)
}

/// Endomorphisms with a two-sided inverse that is itself a frame map.
pub fn automorphisms(l: &Arc<Frame>) -> HomSet {
    endomorphisms(l).filter(|m| m.inverse().is_some())
}

/// `Arr⟨S, L⟩` made into a frame under the pointwise order, together with the
/// evaluation-at-`a` isomorphism onto `L` and its inverse.
#[derive(Debug, Clone)]
pub struct Reconstruction {
    pub homs: HomSet,
    pub frame: Arc<Frame>,
    /// `p ↦ p(a)`.
    pub evaluation: FrameMap,
    /// `l ↦ (a ↦ l)`.
    pub inverse: FrameMap,
}

pub fn arr_s_frame(l: &Arc<Frame>) -> Result<Reconstruction> {
    if l.is_degenerate() {
        return Err(Error::DegenerateFrame);
    }
    let s = sierpinski();
    let a = s.index_of("a").expect("S has a middle element");
    let homs = enumerate_homs(&s, l);
    let n = homs.len();
    let labels = homs
        .maps()
        .iter()
        .map(|p| format!("a↦{}", l.label(p.apply(a))))
        .collect();
    let frame = Arc::new(lattice_tables(Poset::new(labels, homs.order().to_vec())?)?);

    let eval: Vec<usize> = homs.maps().iter().map(|p| p.apply(a)).collect();
    let mut inv = vec![usize::MAX; l.len()];
    for (i, &x) in eval.iter().enumerate() {
        if inv[x] != usize::MAX {
            return Err(Error::InvalidMap(format!(
                "evaluation is not injective at {}",
                l.label(x)
            )));
        }
        inv[x] = i;
    }
    if n != l.len() || inv.contains(&usize::MAX) {
        return Err(Error::InvalidMap("evaluation is not surjective".into()));
    }
    // order-bijection with order-preserving inverse ...
    for i in 0..n {
        for j in 0..n {
            if frame.leq(i, j) != l.leq(eval[i], eval[j]) {
                return Err(Error::InvalidMap(format!(
                    "evaluation does not reflect order at ({}, {})",
                    frame.label(i),
                    frame.label(j)
                )));
            }
        }
    }
    // ... and then meets/joins re-checked directly
    let evaluation = FrameMap::new(frame.clone(), l.clone(), eval)?;
    let inverse = FrameMap::new(l.clone(), frame.clone(), inv)?;
    Ok(Reconstruction {
        homs,
        frame,
        evaluation,
        inverse,
    })
}

/// An arrow `n: g → L` with `f ∘ n ≠ h ∘ n`, for parallel `f ≠ h: L → M`.
pub fn separating_arrow(g: &Arc<Frame>, f: &FrameMap, h: &FrameMap) -> Result<FrameMap> {
    if !same_frame(f.source(), h.source()) || !same_frame(f.target(), h.target()) {
        return Err(Error::Mismatch("arrows are not parallel".into()));
    }
    if f.image() == h.image() {
        return Err(Error::Mismatch("arrows are equal".into()));
    }
    let l = f.source();
    // every three-element frame is the Sierpinski chain: send its middle to a
    // point where f and h disagree
    if g.len() == 3 {
        let x = (0..l.len())
            .find(|&x| f.apply(x) != h.apply(x))
            .expect("unequal arrows differ somewhere");
        let mid = (0..3)
            .find(|&y| y != g.bottom() && y != g.top())
            .expect("three elements");
        let mut image = vec![0; 3];
        image[g.bottom()] = l.bottom();
        image[g.top()] = l.top();
        image[mid] = x;
        return FrameMap::new(g.clone(), l.clone(), image);
    }
    hom_images(g, l)
        .into_iter()
        .find(|n| n.iter().any(|&y| f.apply(y) != h.apply(y)))
        .map(|n| FrameMap::new_unchecked(g.clone(), l.clone(), n))
        .ok_or(Error::NotFound)
}

/// A named finite family of frames standing in for "all frames".
#[derive(Debug, Clone)]
pub struct Corpus {
    pub id: String,
    pub frames: Vec<Arc<Frame>>,
}

impl Corpus {
    pub fn new(id: impl Into<String>, frames: Vec<Arc<Frame>>) -> Self {
        Corpus { id: id.into(), frames }
    }
}

/// A parallel pair in the corpus that no arrow out of the candidate separates.
#[derive(Debug, Clone)]
pub struct SeparationFailure {
    pub source: usize,
    pub target: usize,
    pub f: FrameMap,
    pub h: FrameMap,
}

#[derive(Debug, Clone)]
pub struct GeneratorReport {
    pub corpus_id: String,
    pub holds: bool,
    pub failure: Option<SeparationFailure>,
}

/// Whether `g` separates every unequal parallel pair `L ⇉ M` with `L, M` in the corpus.
///
/// Some `n: g → L` separates `f ≠ h` iff `f` and `h` disagree somewhere in the
/// union of the images of all such `n`, so that union is computed once per `L`.
pub fn corpus_generator(g: &Arc<Frame>, corpus: &Corpus) -> GeneratorReport {
    for (i, l) in corpus.frames.iter().enumerate() {
        let mut reached = vec![false; l.len()];
        for n in hom_images(g, l) {
            for y in n {
                reached[y] = true;
            }
        }
        for (j, m) in corpus.frames.iter().enumerate() {
            let homs = hom_images(l, m);
            for p in 0..homs.len() {
                for q in (p + 1)..homs.len() {
                    let separated = (0..l.len()).any(|x| reached[x] && homs[p][x] != homs[q][x]);
                    if !separated {
                        return GeneratorReport {
                            corpus_id: corpus.id.clone(),
                            holds: false,
                            failure: Some(SeparationFailure {
                                source: i,
                                target: j,
                                f: FrameMap::new_unchecked(l.clone(), m.clone(), homs[p].clone()),
                                h: FrameMap::new_unchecked(l.clone(), m.clone(), homs[q].clone()),
                            }),
                        };
                    }
                }
            }
        }
    }
    GeneratorReport {
        corpus_id: corpus.id.clone(),
        holds: true,
        failure: None,
    }
}
