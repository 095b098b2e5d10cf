//! Frame homomorphisms between finite frames.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::frame::Frame;

/// One failed condition found by [`check_frame_map`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Image has the wrong number of entries.
    Arity {
        expected: usize,
        found: usize,
    },
    OutOfRange {
        element: usize,
        image: usize,
    },
    Bottom,
    Top,
    Monotone(usize, usize),
    Meet(usize, usize),
    Join(usize, usize),
}

/// All violated conditions of a candidate map; empty means valid.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MapReport {
    pub violations: Vec<Violation>,
}

impl MapReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn describe(&self, source: &Frame, target: &Frame) -> String {
        if self.is_valid() {
            return "VALID".into();
        }
        let l = |x: usize| source.label(x);
        let lines: Vec<String> = self
            .violations
            .iter()
            .map(|v| match *v {
                Violation::Arity { expected, found } => {
                    format!("image has {found} entries, source has {expected}")
                }
                Violation::OutOfRange { element, image } => {
                    format!("{} ↦ {image} is outside the target (size {})", l(element), target.len())
                }
                Violation::Bottom => "0 is not sent to 0".into(),
                Violation::Top => "1 is not sent to 1".into(),
                Violation::Monotone(x, y) => format!("monotonicity fails at ({}, {})", l(x), l(y)),
                Violation::Meet(x, y) => format!("meet fails at ({}, {})", l(x), l(y)),
                Violation::Join(x, y) => format!("join fails at ({}, {})", l(x), l(y)),
            })
            .collect();
        format!("INVALID\n  {}", lines.join("\n  "))
    }
}

/// Checks endpoint, binary meet, binary join preservation and monotonicity.
/// For finite frames these imply preservation of all finite meets and all joins.
pub fn check_frame_map(source: &Frame, target: &Frame, image: &[usize]) -> MapReport {
    let mut violations = Vec::new();
    if image.len() != source.len() {
        violations.push(Violation::Arity {
            expected: source.len(),
            found: image.len(),
        });
        return MapReport { violations };
    }
    for (x, &y) in image.iter().enumerate() {
        if y >= target.len() {
            violations.push(Violation::OutOfRange { element: x, image: y });
        }
    }
    if !violations.is_empty() {
        return MapReport { violations };
    }
    if image[source.bottom()] != target.bottom() {
        violations.push(Violation::Bottom);
    }
    if image[source.top()] != target.top() {
        violations.push(Violation::Top);
    }
    let n = source.len();
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            if source.leq(x, y) && !target.leq(image[x], image[y]) {
                violations.push(Violation::Monotone(x, y));
            }
            if y < x {
                continue;
            }
            if image[source.meet(x, y)] != target.meet(image[x], image[y]) {
                violations.push(Violation::Meet(x, y));
            }
            if image[source.join(x, y)] != target.join(image[x], image[y]) {
                violations.push(Violation::Join(x, y));
            }
        }
    }
    MapReport { violations }
}

/// A validated frame homomorphism.
#[derive(Debug, Clone)]
pub struct FrameMap {
    source: Arc<Frame>,
    target: Arc<Frame>,
    image: Vec<usize>,
}

impl PartialEq for FrameMap {
    fn eq(&self, other: &Self) -> bool {
        self.image == other.image && same_frame(&self.source, &other.source) && same_frame(&self.target, &other.target)
    }
}

impl Eq for FrameMap {}

pub(crate) fn same_frame(a: &Arc<Frame>, b: &Arc<Frame>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl FrameMap {
    pub fn new(source: Arc<Frame>, target: Arc<Frame>, image: Vec<usize>) -> Result<Self> {
        let report = check_frame_map(&source, &target, &image);
        if !report.is_valid() {
            return Err(Error::InvalidMap(report.describe(&source, &target)));
        }
        Ok(FrameMap { source, target, image })
    }

    /// For images produced by a search that already enforced every condition.
    pub(crate) fn new_unchecked(source: Arc<Frame>, target: Arc<Frame>, image: Vec<usize>) -> Self {
        debug_assert!(check_frame_map(&source, &target, &image).is_valid());
        FrameMap { source, target, image }
    }

    pub fn identity(frame: Arc<Frame>) -> Self {
        let image = (0..frame.len()).collect();
        FrameMap {
            source: frame.clone(),
            target: frame,
            image,
        }
    }

    pub fn source(&self) -> &Arc<Frame> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Frame> {
        &self.target
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn after(&self, inner: &FrameMap) -> Result<FrameMap> {
        if !same_frame(&inner.target, &self.source) {
            return Err(Error::Mismatch(
                "composite: target of the inner arrow is not the source of the outer".into(),
            ));
        }
        let image = inner.image.iter().map(|&y| self.image[y]).collect();
        Ok(FrameMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            image,
        })
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.len() != self.target.len() {
            return false;
        }
        let mut hit = vec![false; self.target.len()];
        for &y in &self.image {
            if hit[y] {
                return false;
            }
            hit[y] = true;
        }
        true
    }

    /// The two-sided inverse, when the image is a bijection whose inverse is also a frame map.
    pub fn inverse(&self) -> Option<FrameMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        FrameMap::new(self.target.clone(), self.source.clone(), inv).ok()
    }

    /// `x↦y` pairs using frame labels.
    pub fn render(&self) -> String {
        self.image
            .iter()
            .enumerate()
            .map(|(x, &y)| format!("{}↦{}", self.source.label(x), self.target.label(y)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for FrameMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
