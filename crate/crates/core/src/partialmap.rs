//! Partial injections on a finite ground set.
//!
//! Maps act on the right: `μ·f` is the image of `μ` under `f`, and the
//! composite `f.compose(g)` sends `μ` to `(μ·f)·g`. Every operation in the
//! crate (including the Wagner–Preston representation) uses this convention.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartialMapError {
    #[error("ground set must be non-empty")]
    EmptyGround,
    #[error("duplicate ground label {0:?}")]
    DuplicateLabel(String),
    #[error("expected {expected} image slots, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("image index {0} is outside the ground set")]
    ImageOutOfRange(usize),
    #[error("points {0} and {1} share the image {2}; map is not injective")]
    NotInjective(usize, usize, usize),
    #[error("partial injections live on different ground sets")]
    GroundMismatch,
    #[error("argument is not idempotent")]
    NotIdempotent,
}

#[derive(Debug, PartialEq, Eq)]
struct GroundInner {
    labels: Vec<String>,
}

/// An immutable, labelled finite set. Clones share identity; two ground sets
/// built separately never interoperate, even when their labels agree.
#[derive(Clone, Debug)]
pub struct GroundSet(Arc<GroundInner>);

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self, PartialMapError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(PartialMapError::EmptyGround);
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(PartialMapError::DuplicateLabel(l.clone()));
            }
        }
        Ok(GroundSet(Arc::new(GroundInner { labels })))
    }

    /// Ground set labelled `1..=n`.
    pub fn numbered(n: usize) -> Result<Self, PartialMapError> {
        Self::new((1..=n).map(|i| i.to_string()))
    }

    pub fn size(&self) -> usize {
        self.0.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }

    pub fn same_as(&self, other: &GroundSet) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for GroundSet {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialInjection {
    ground: GroundSet,
    images: Vec<Option<usize>>,
}

impl PartialInjection {
    /// Builds a map from its image slots; `None` marks an undefined point.
    pub fn new(ground: &GroundSet, images: Vec<Option<usize>>) -> Result<Self, PartialMapError> {
        let n = ground.size();
        if images.len() != n {
            return Err(PartialMapError::WrongLength { expected: n, got: images.len() });
        }
        let mut owner = vec![None; n];
        for (mu, img) in images.iter().enumerate() {
            if let Some(j) = *img {
                if j >= n {
                    return Err(PartialMapError::ImageOutOfRange(j));
                }
                if let Some(prev) = owner[j] {
                    return Err(PartialMapError::NotInjective(prev, mu, j));
                }
                owner[j] = Some(mu);
            }
        }
        Ok(PartialInjection { ground: ground.clone(), images })
    }

    /// Builds a map from `(point, image)` pairs.
    pub fn from_pairs(ground: &GroundSet, pairs: &[(usize, usize)]) -> Result<Self, PartialMapError> {
        let mut images = vec![None; ground.size()];
        for &(mu, eta) in pairs {
            if mu >= ground.size() {
                return Err(PartialMapError::ImageOutOfRange(mu));
            }
            images[mu] = Some(eta);
        }
        Self::new(ground, images)
    }

    pub fn empty(ground: &GroundSet) -> Self {
        PartialInjection { ground: ground.clone(), images: vec![None; ground.size()] }
    }

    /// Identity restricted to `points`.
    pub fn identity_on(ground: &GroundSet, points: &[usize]) -> Result<Self, PartialMapError> {
        let pairs: Vec<_> = points.iter().map(|&p| (p, p)).collect();
        Self::from_pairs(ground, &pairs)
    }

    pub fn identity(ground: &GroundSet) -> Self {
        PartialInjection { ground: ground.clone(), images: (0..ground.size()).map(Some).collect() }
    }

    /// Every partial injection on `ground`, images ordered lexicographically
    /// with defined slots before undefined ones (so the identity comes first
    /// and the empty map last).
    pub fn enumerate(ground: &GroundSet) -> Vec<PartialInjection> {
        let n = ground.size();
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(
            n: usize,
            current: &mut Vec<Option<usize>>,
            used: &mut [bool],
            ground: &GroundSet,
            out: &mut Vec<PartialInjection>,
        ) {
            if current.len() == n {
                out.push(PartialInjection { ground: ground.clone(), images: current.clone() });
                return;
            }
            for j in 0..n {
                if !used[j] {
                    used[j] = true;
                    current.push(Some(j));
                    rec(n, current, used, ground, out);
                    current.pop();
                    used[j] = false;
                }
            }
            current.push(None);
            rec(n, current, used, ground, out);
            current.pop();
        }
        rec(n, &mut current, &mut used, ground, &mut out);
        out
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn images(&self) -> &[Option<usize>] {
        &self.images
    }

    /// Image of `mu`, if defined.
    pub fn apply(&self, mu: usize) -> Option<usize> {
        self.images.get(mu).copied().flatten()
    }

    fn check_ground(&self, other: &PartialInjection) -> Result<(), PartialMapError> {
        if self.ground.same_as(&other.ground) {
            Ok(())
        } else {
            Err(PartialMapError::GroundMismatch)
        }
    }

    /// Right-action composite: `μ ↦ (μ·self)·other`.
    pub fn compose(&self, other: &PartialInjection) -> Result<PartialInjection, PartialMapError> {
        self.check_ground(other)?;
        let images = self.images.iter().map(|img| img.and_then(|j| other.images[j])).collect();
        Ok(PartialInjection { ground: self.ground.clone(), images })
    }

    pub fn inverse(&self) -> PartialInjection {
        let mut images = vec![None; self.ground.size()];
        for (mu, img) in self.images.iter().enumerate() {
            if let Some(j) = *img {
                images[j] = Some(mu);
            }
        }
        PartialInjection { ground: self.ground.clone(), images }
    }

    pub fn domain_of(&self) -> BTreeSet<usize> {
        self.images.iter().enumerate().filter_map(|(mu, img)| img.map(|_| mu)).collect()
    }

    pub fn image_of(&self) -> BTreeSet<usize> {
        self.images.iter().filter_map(|img| *img).collect()
    }

    pub fn is_idempotent(&self) -> bool {
        // f∘f = f for an injection forces every defined point to be fixed
        self.images.iter().enumerate().all(|(mu, img)| img.is_none_or(|j| j == mu))
    }

    /// `self` restricted to `dom(other)`.
    pub fn restrict(&self, other: &PartialInjection) -> Result<PartialInjection, PartialMapError> {
        self.check_ground(other)?;
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(img, g)| if g.is_some() { *img } else { None })
            .collect();
        Ok(PartialInjection { ground: self.ground.clone(), images })
    }

    /// Natural order on idempotents: `e ≤ f` iff `dom(e) ⊆ dom(f)`.
    pub fn idempotent_leq(&self, other: &PartialInjection) -> Result<bool, PartialMapError> {
        self.check_ground(other)?;
        if !self.is_idempotent() || !other.is_idempotent() {
            return Err(PartialMapError::NotIdempotent);
        }
        Ok(self.images.iter().zip(&other.images).all(|(a, b)| a.is_none() || b.is_some()))
    }
}

/// Space-separated image labels in ground order, `-` where undefined.
impl fmt::Display for PartialInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match img {
                Some(j) => f.write_str(self.ground.label(*j))?,
                None => f.write_str("-")?,
            }
        }
        Ok(())
    }
}
