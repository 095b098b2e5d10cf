//! Canonical labelling of finite posets (and hence of finite lattices, whose
//! isomorphism type is their order type).
//!
//! Colour refinement on the order relation followed by individualisation of
//! one vertex of the first non-singleton cell at a time. Every leaf of the
//! search tree yields an ordering of the elements; the certificate is the
//! lexicographically least relation matrix over all leaves. Both the refinement
//! and the set of leaves are label-invariant, so the certificate is too.

use std::fmt;

use crate::frame::Frame;
use crate::poset::Poset;

/// Relation matrix of a poset in canonical order, packed 8 bits per byte.
/// Ordered by size first, then by packed bits.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate {
    size: usize,
    bits: Vec<u8>,
}

impl Certificate {
    pub fn size(&self) -> usize {
        self.size
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.size)?;
        if self.bits.is_empty() {
            return f.write_str("-");
        }
        for b in &self.bits {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

/// Result of canonical labelling: `order[i]` is the element placed at canonical position `i`.
#[derive(Debug, Clone)]
pub struct Canonical {
    pub certificate: Certificate,
    pub order: Vec<usize>,
}

pub fn canonical_poset(p: &Poset) -> Canonical {
    let n = p.len();
    let mut best: Option<(Vec<bool>, Vec<usize>)> = None;
    search(p, vec![0; n], &mut best);
    let (code, order) = best.unwrap_or_default();
    Canonical {
        certificate: pack(n, &code),
        order,
    }
}

pub fn canonical_form(f: &Frame) -> Certificate {
    canonical_poset(f.poset()).certificate
}

pub fn iso(f1: &Frame, f2: &Frame) -> bool {
    f1.len() == f2.len() && canonical_form(f1) == canonical_form(f2)
}

pub fn poset_iso(p: &Poset, q: &Poset) -> bool {
    p.len() == q.len() && canonical_poset(p).certificate == canonical_poset(q).certificate
}

/// An order isomorphism `p → q` as an index map, if one exists.
pub fn poset_isomorphism(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    if p.len() != q.len() {
        return None;
    }
    let cp = canonical_poset(p);
    let cq = canonical_poset(q);
    if cp.certificate != cq.certificate {
        return None;
    }
    let mut map = vec![0; p.len()];
    for (x, y) in cp.order.iter().zip(&cq.order) {
        map[*x] = *y;
    }
    Some(map)
}

/// A lattice isomorphism `f1 → f2` as an index map, if one exists.
pub fn isomorphism(f1: &Frame, f2: &Frame) -> Option<Vec<usize>> {
    poset_isomorphism(f1.poset(), f2.poset())
}

fn pack(n: usize, code: &[bool]) -> Certificate {
    let mut bits = vec![0u8; code.len().div_ceil(8)];
    for (i, &b) in code.iter().enumerate() {
        if b {
            bits[i / 8] |= 0x80 >> (i % 8);
        }
    }
    Certificate { size: n, bits }
}

fn search(p: &Poset, colors: Vec<u32>, best: &mut Option<(Vec<bool>, Vec<usize>)>) {
    let colors = refine(p, colors);
    let n = p.len();
    let mut counts = vec![0usize; n];
    for &c in &colors {
        counts[c as usize] += 1;
    }
    let Some(target) = counts.iter().position(|&c| c > 1) else {
        let mut order = vec![0; n];
        for (x, &c) in colors.iter().enumerate() {
            order[c as usize] = x;
        }
        let mut code = Vec::with_capacity(n * n);
        for &x in &order {
            for &y in &order {
                code.push(p.leq(x, y));
            }
        }
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    for v in (0..n).filter(|&v| colors[v] as usize == target) {
        let split = colors
            .iter()
            .enumerate()
            .map(|(u, &c)| 2 * c + u32::from(c as usize == target && u != v))
            .collect();
        search(p, split, best);
    }
}

/// Iterated colour refinement. Colours are dense ranks `0..k`; the refined
/// colour of `x` is ordered first by its old colour, so cell order is stable.
fn refine(p: &Poset, mut colors: Vec<u32>) -> Vec<u32> {
    let n = p.len();
    colors = densify(&colors);
    let mut classes = distinct(&colors);
    loop {
        let sigs: Vec<(u32, Vec<(u32, u8)>)> = (0..n)
            .map(|x| {
                let mut nb: Vec<(u32, u8)> = (0..n)
                    .filter(|&y| y != x)
                    .map(|y| {
                        let rel = if p.leq(y, x) {
                            0
                        } else if p.leq(x, y) {
                            1
                        } else {
                            2
                        };
                        (colors[y], rel)
                    })
                    .collect();
                nb.sort_unstable();
                (colors[x], nb)
            })
            .collect();
        let next = densify(&sigs);
        let k = distinct(&next);
        colors = next;
        if k == classes {
            return colors;
        }
        classes = k;
    }
}

fn densify<T: Ord + Clone>(sigs: &[T]) -> Vec<u32> {
    let mut sorted: Vec<T> = sigs.to_vec();
    sorted.sort();
    sorted.dedup();
    sigs.iter()
        .map(|s| sorted.binary_search(s).expect("present") as u32)
        .collect()
}

fn distinct(colors: &[u32]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m as usize + 1)
}
