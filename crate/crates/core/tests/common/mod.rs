//! Brute-force oracles shared by the integration tests. Nothing here calls the
//! search, closure or canonical-form code under test; meets and joins are
//! recomputed from the order relation alone.

#![allow(dead_code)]

use std::sync::Arc;

use finframe::census::frame_classes;
use finframe::{Frame, Poset};

/// A bare order given by its `≤` matrix.
#[derive(Clone, Debug)]
pub struct Order {
    pub n: usize,
    pub leq: Vec<bool>,
}

impl Order {
    pub fn of_poset(p: &Poset) -> Self {
        Order {
            n: p.len(),
            leq: p.relation().to_vec(),
        }
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }

    /// Greatest common lower bound, if unique.
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let lbs: Vec<usize> = (0..self.n).filter(|&z| self.le(z, x) && self.le(z, y)).collect();
        lbs.iter().copied().find(|&c| lbs.iter().all(|&z| self.le(z, c)))
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        let ubs: Vec<usize> = (0..self.n).filter(|&z| self.le(x, z) && self.le(y, z)).collect();
        ubs.iter().copied().find(|&c| ubs.iter().all(|&z| self.le(c, z)))
    }

    pub fn is_lattice(&self) -> bool {
        self.n > 0 && (0..self.n).all(|x| (0..self.n).all(|y| self.meet(x, y).is_some() && self.join(x, y).is_some()))
    }

    pub fn bottom(&self) -> usize {
        (0..self.n).find(|&b| (0..self.n).all(|x| self.le(b, x))).unwrap()
    }

    pub fn top(&self) -> usize {
        (0..self.n).find(|&t| (0..self.n).all(|x| self.le(x, t))).unwrap()
    }

    pub fn is_distributive(&self) -> bool {
        let m = |x, y| self.meet(x, y).unwrap();
        let j = |x, y| self.join(x, y).unwrap();
        (0..self.n).all(|x| (0..self.n).all(|y| (0..self.n).all(|z| m(x, j(y, z)) == j(m(x, y), m(x, z)))))
    }
}

/// Frame-map test from first principles: endpoints, binary meets and joins.
pub fn is_frame_map(k: &Order, l: &Order, f: &[usize]) -> bool {
    if f[k.bottom()] != l.bottom() || f[k.top()] != l.top() {
        return false;
    }
    (0..k.n).all(|x| {
        (0..k.n).all(|y| {
            f[k.meet(x, y).unwrap()] == l.meet(f[x], f[y]).unwrap()
                && f[k.join(x, y).unwrap()] == l.join(f[x], f[y]).unwrap()
        })
    })
}

/// Every function `k → l` (as image vectors, lexicographic), filtered to frame maps.
pub fn brute_force_homs(k: &Frame, l: &Frame) -> Vec<Vec<usize>> {
    let (ko, lo) = (Order::of_poset(k.poset()), Order::of_poset(l.poset()));
    let mut out = Vec::new();
    let total = (l.len() as u64).pow(k.len() as u32);
    for code in 0..total {
        let mut c = code;
        let mut f = vec![0; k.len()];
        for slot in f.iter_mut().rev() {
            *slot = (c % l.len() as u64) as usize;
            c /= l.len() as u64;
        }
        if is_frame_map(&ko, &lo, &f) {
            out.push(f);
        }
    }
    out
}

/// Number of functions in the brute-force space.
pub fn function_count(k: &Frame, l: &Frame) -> u64 {
    (l.len() as u64).pow(k.len() as u32)
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Order isomorphism by trying every bijection.
pub fn brute_force_iso(a: &Order, b: &Order) -> bool {
    a.n == b.n
        && permutations(a.n)
            .iter()
            .any(|p| (0..a.n).all(|x| (0..a.n).all(|y| a.le(x, y) == b.le(p[x], p[y]))))
}

/// All partial orders on `n` labelled elements, by scanning every strict
/// relation on ordered pairs.
pub fn labelled_posets(n: usize) -> Vec<Order> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut rows = vec![0u32; n];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                rows[i] |= 1 << j;
            }
        }
        let antisym = (0..n).all(|i| (0..n).all(|j| rows[i] >> j & 1 == 0 || rows[j] >> i & 1 == 0));
        let trans = (0..n).all(|i| (0..n).all(|j| rows[i] >> j & 1 == 0 || rows[j] & !rows[i] == 0));
        if antisym && trans {
            out.push(order_from_rows(n, &rows));
        }
    }
    out
}

/// Posets whose strict relation only uses pairs `i < j` (every poset has
/// such a labelling, via a linear extension).
pub fn naturally_labelled_posets(n: usize) -> Vec<Order> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut rows = vec![0u32; n];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                rows[i] |= 1 << j;
            }
        }
        if (0..n).all(|i| (0..n).all(|j| rows[i] >> j & 1 == 0 || rows[j] & !rows[i] == 0)) {
            out.push(order_from_rows(n, &rows));
        }
    }
    out
}

fn order_from_rows(n: usize, rows: &[u32]) -> Order {
    let mut leq = vec![false; n * n];
    for i in 0..n {
        leq[i * n + i] = true;
        for j in 0..n {
            if rows[i] >> j & 1 == 1 {
                leq[i * n + j] = true;
            }
        }
    }
    Order { n, leq }
}

/// Distributive lattices on `n` elements up to isomorphism, the slow way.
pub fn brute_force_frames(n: usize) -> Vec<Order> {
    let mut reps: Vec<Order> = Vec::new();
    for o in labelled_posets(n) {
        if o.is_lattice() && o.is_distributive() && !reps.iter().any(|r| brute_force_iso(r, &o)) {
            reps.push(o);
        }
    }
    reps
}

/// Downset count by scanning every subset.
pub fn downset_count(p: &Poset) -> usize {
    let n = p.len();
    (0u64..(1 << n))
        .filter(|&m| (0..n).all(|x| m >> x & 1 == 0 || (0..n).all(|y| !p.leq(y, x) || m >> y & 1 == 1)))
        .count()
}

/// Whether the lattice has a five-element sublattice shaped like M3 or N5.
pub fn has_forbidden_sublattice(o: &Order) -> bool {
    let n = o.n;
    let mut found = false;
    choose(n, 5, &mut |s: &[usize]| {
        if found {
            return;
        }
        let closed = s.iter().all(|&x| {
            s.iter()
                .all(|&y| s.contains(&o.meet(x, y).unwrap()) && s.contains(&o.join(x, y).unwrap()))
        });
        if !closed {
            return;
        }
        let bottom = *s.iter().find(|&&b| s.iter().all(|&x| o.le(b, x))).unwrap();
        let top = *s.iter().find(|&&t| s.iter().all(|&x| o.le(x, t))).unwrap();
        let mid: Vec<usize> = s.iter().copied().filter(|&x| x != bottom && x != top).collect();
        let comparable_pairs = [(0, 1), (0, 2), (1, 2)]
            .iter()
            .filter(|&&(i, j)| o.le(mid[i], mid[j]) || o.le(mid[j], mid[i]))
            .count();
        // M3: three pairwise incomparable atoms; N5: one comparable pair
        if comparable_pairs == 0 || comparable_pairs == 1 {
            found = true;
        }
    });
    found
}

fn choose(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    go(0, n, k, &mut Vec::new(), f);
}

/// Every frame up to `n` elements, from the census.
pub fn frames_up_to(n: usize) -> Vec<Arc<Frame>> {
    frame_classes(n, n).unwrap().into_iter().map(|c| c.frame).collect()
}

/// Whether some arrow `g → L` separates `f ≠ h`, by brute force.
pub fn brute_force_separates(g: &Frame, l: &Frame, f: &[usize], h: &[usize]) -> bool {
    brute_force_homs(g, l).iter().any(|n| n.iter().any(|&y| f[y] != h[y]))
}
