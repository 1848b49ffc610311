//! Finite reduced crossed complexes.
//!
//! A complex of length `L` is a tower `A_L -> ... -> A_2 -> A_1` of finite
//! groups with boundary homomorphisms `∂_n: A_n -> A_{n-1}` and left actions
//! `▷_n` of `A_1` on each `A_n`, `n >= 2`. Degrees are 1-based throughout the
//! public API, matching the usual notation.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{quotient, FiniteGroup, GroupAction, GroupHom, Subgroup};

/// Axiom names used in [`ValidationReport`]s.
pub mod axiom {
    /// `∂_n` is a homomorphism.
    pub const BOUNDARY_HOM: &str = "boundary-hom";
    /// `▷_n` is an action by automorphisms.
    pub const ACTION: &str = "action";
    /// `∂₂(x ▷ e) = x ∂₂(e) x⁻¹`
    pub const CM1: &str = "CM1";
    /// `∂₂(e) ▷ f = e f e⁻¹`
    pub const PEIFFER: &str = "Peiffer";
    /// `∂_n(x ▷ a) = x ▷ ∂_n(a)` for `n >= 3`
    pub const EQUIVARIANCE: &str = "equivariance";
    /// `∂_{n-1} ∘ ∂_n` trivial for `n >= 3`
    pub const COMPLEX: &str = "complex";
    /// `A_n` abelian for `n >= 3`
    pub const ABELIAN: &str = "abelian";
    /// `x ▷ a = a` for `x ∈ im ∂₂`, `n >= 3`
    pub const ACTION_FACTORING: &str = "action-factoring";
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: &'static str,
    pub degree: usize,
    pub witness: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at degree {} witness {:?}", self.axiom, self.degree, self.witness)
    }
}

/// Outcome of a validation pass. Each violated axiom is reported once per
/// degree, with the first witness found.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, axiom: &'static str, degree: usize, witness: Vec<usize>) {
        self.violations.push(Violation { axiom, degree, witness });
    }

    pub fn axioms(&self) -> Vec<&'static str> {
        let mut names: Vec<_> = self.violations.iter().map(|v| v.axiom).collect();
        names.sort_unstable();
        names.dedup();
        names
    }

    pub fn mentions(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return write!(f, "ok");
        }
        let parts: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// A finite, reduced, explicitly truncated crossed complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCrossedComplex {
    groups: Vec<Arc<FiniteGroup>>,
    boundaries: Vec<GroupHom>,
    actions: Vec<GroupAction>,
    name: Option<String>,
}

impl FiniteCrossedComplex {
    /// Assembles a complex after checking only that the tables fit together.
    ///
    /// `groups[0]` is `A_1`; `boundaries[i]` is `∂_{i+2}`; `actions[i]` is
    /// `▷_{i+2}`.
    pub fn from_parts(
        groups: Vec<Arc<FiniteGroup>>,
        boundaries: Vec<GroupHom>,
        actions: Vec<GroupAction>,
    ) -> Result<Self> {
        if groups.is_empty() {
            return Err(Error::DimensionMismatch("a crossed complex needs A_1".into()));
        }
        let len = groups.len();
        if boundaries.len() != len - 1 || actions.len() != len - 1 {
            return Err(Error::DimensionMismatch(format!(
                "length {len} needs {} boundaries and actions, got {} and {}",
                len - 1,
                boundaries.len(),
                actions.len()
            )));
        }
        for (i, d) in boundaries.iter().enumerate() {
            if **d.source() != *groups[i + 1] || **d.target() != *groups[i] {
                return Err(Error::DimensionMismatch(format!("boundary ∂_{} has the wrong source or target", i + 2)));
            }
        }
        for (i, a) in actions.iter().enumerate() {
            if **a.actor() != *groups[0] || **a.space() != *groups[i + 1] {
                return Err(Error::DimensionMismatch(format!("action ▷_{} has the wrong actor or space", i + 2)));
            }
        }
        Ok(FiniteCrossedComplex { groups, boundaries, actions, name: None })
    }

    /// [`from_parts`](Self::from_parts) followed by [`validate`](Self::validate).
    pub fn new(groups: Vec<Arc<FiniteGroup>>, boundaries: Vec<GroupHom>, actions: Vec<GroupAction>) -> Result<Self> {
        let complex = Self::from_parts(groups, boundaries, actions)?;
        let report = complex.validate();
        if report.ok() {
            Ok(complex)
        } else {
            Err(Error::InvalidComplex(report))
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Truncation length `L`.
    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `A_n` for `1 <= n <= L`.
    pub fn group(&self, n: usize) -> &Arc<FiniteGroup> {
        &self.groups[n - 1]
    }

    /// `∂_n` for `2 <= n <= L`.
    pub fn boundary(&self, n: usize) -> &GroupHom {
        &self.boundaries[n - 2]
    }

    /// `▷_n` for `2 <= n <= L`.
    pub fn action(&self, n: usize) -> &GroupAction {
        &self.actions[n - 2]
    }

    pub fn groups(&self) -> &[Arc<FiniteGroup>] {
        &self.groups
    }

    pub fn boundaries(&self) -> &[GroupHom] {
        &self.boundaries
    }

    pub fn actions(&self) -> &[GroupAction] {
        &self.actions
    }

    /// `|A_k|`, with `|A_k| = 1` above the truncation.
    pub fn size_at(&self, k: usize) -> Result<usize> {
        match k {
            0 => Err(Error::IndexOutOfRange("size_at needs k >= 1".into())),
            k if k > self.len() => Ok(1),
            k => Ok(self.groups[k - 1].order()),
        }
    }

    /// Checks every crossed-complex axiom exhaustively.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let a1 = &*self.groups[0];
        for n in 2..=self.len() {
            let an = &*self.groups[n - 1];
            let d = self.boundary(n);
            let act = self.action(n);

            if let Some(v) = d.check() {
                report.push(axiom::BOUNDARY_HOM, n, vec![v.x, v.y]);
            }
            if let Some(v) = act.check() {
                let witness = match v {
                    crate::group::ActionViolation::Identity { e } => vec![0, e],
                    crate::group::ActionViolation::Composition { g, h, e } => vec![g, h, e],
                    crate::group::ActionViolation::NotAutomorphism { g, e, f } => vec![g, e, f],
                };
                report.push(axiom::ACTION, n, witness);
            }

            if n == 2 {
                if let Some((x, e)) = pairs(a1.order(), an.order())
                    .find(|&(x, e)| d.apply(act.act(x, e)) != a1.conjugate(x, d.apply(e)))
                {
                    report.push(axiom::CM1, 2, vec![x, e]);
                }
                if let Some((e, f)) = pairs(an.order(), an.order())
                    .find(|&(e, f)| act.act(d.apply(e), f) != an.conjugate(e, f))
                {
                    report.push(axiom::PEIFFER, 2, vec![e, f]);
                }
                continue;
            }

            if let Some((a, b)) = an.commuting_witness() {
                report.push(axiom::ABELIAN, n, vec![a, b]);
            }
            let below = self.action(n - 1);
            if let Some((x, a)) = pairs(a1.order(), an.order())
                .find(|&(x, a)| d.apply(act.act(x, a)) != below.act(x, d.apply(a)))
            {
                report.push(axiom::EQUIVARIANCE, n, vec![x, a]);
            }
            let lower = self.boundary(n - 1);
            if let Some(a) = an.elements().find(|&a| lower.apply(d.apply(a)) != 0) {
                report.push(axiom::COMPLEX, n, vec![a]);
            }
            let d2 = self.boundary(2);
            let image: Vec<usize> = {
                let mut img: Vec<usize> = d2.images().to_vec();
                img.sort_unstable();
                img.dedup();
                img
            };
            if let Some((x, a)) = image
                .iter()
                .flat_map(|&x| an.elements().map(move |a| (x, a)))
                .find(|&(x, a)| act.act(x, a) != a)
            {
                report.push(axiom::ACTION_FACTORING, n, vec![x, a]);
            }
        }
        report
    }

    /// The one-term complex with `A_1 = G`.
    pub fn from_group(group: FiniteGroup) -> Self {
        let name = group.name().map(str::to_owned);
        let complex = FiniteCrossedComplex {
            groups: vec![Arc::new(group)],
            boundaries: Vec::new(),
            actions: Vec::new(),
            name: None,
        };
        match name {
            Some(n) => complex.with_name(n),
            None => complex,
        }
    }

    /// The length-2 complex of a crossed module `∂: E -> G` with `G` acting on `E`.
    pub fn from_crossed_module(
        base: Arc<FiniteGroup>,
        fibre: Arc<FiniteGroup>,
        boundary: Vec<usize>,
        action: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let d = GroupHom::new(fibre.clone(), base.clone(), boundary)?;
        let act = GroupAction::new(base.clone(), fibre.clone(), action)?;
        Self::new(vec![base, fibre], vec![d], vec![act])
    }

    /// `A_1 / im ∂₂`, or `A_1` itself when `L = 1`.
    pub fn pi1(&self) -> Result<FiniteGroup> {
        let a1 = &self.groups[0];
        if self.len() == 1 {
            return Ok(FiniteGroup::clone(a1));
        }
        let image = self.boundary(2).image_subgroup()?.into_normal()?;
        Ok(quotient(a1, &image)?.0)
    }

    /// `ker ∂_n / im ∂_{n+1}` for `2 <= n <= L`, with `∂_{L+1}` trivial.
    pub fn homology(&self, n: usize) -> Result<FiniteGroup> {
        if n < 2 || n > self.len() {
            return Err(Error::IndexOutOfRange(format!(
                "homology degree {n} outside 2..={}",
                self.len()
            )));
        }
        let kernel = self.boundary(n).kernel()?;
        let (ker_group, incl) = kernel.subgroup().to_group();
        let ker_group = Arc::new(ker_group);
        let image_local: Vec<usize> = if n < self.len() {
            let mut img: Vec<usize> = self
                .boundary(n + 1)
                .images()
                .iter()
                .map(|&a| {
                    incl.images()
                        .binary_search(&a)
                        .map_err(|_| Error::IndexOutOfRange(format!("im ∂_{} leaves ker ∂_{n}", n + 1)))
                })
                .collect::<Result<_>>()?;
            img.sort_unstable();
            img.dedup();
            img
        } else {
            vec![0]
        };
        let image = Subgroup::new(ker_group.clone(), image_local)?.into_normal()?;
        Ok(quotient(&ker_group, &image)?.0)
    }
}

impl fmt::Display for FiniteCrossedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let orders: Vec<String> = self.groups.iter().map(|g| g.order().to_string()).collect();
        match &self.name {
            Some(name) => write!(f, "{name} (L={}, orders {})", self.len(), orders.join(",")),
            None => write!(f, "crossed complex (L={}, orders {})", self.len(), orders.join(",")),
        }
    }
}

fn pairs(m: usize, n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..m).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

pub fn from_group(group: FiniteGroup) -> FiniteCrossedComplex {
    FiniteCrossedComplex::from_group(group)
}

pub fn size_at(complex: &FiniteCrossedComplex, k: usize) -> Result<usize> {
    complex.size_at(k)
}

pub fn validate(complex: &FiniteCrossedComplex) -> ValidationReport {
    complex.validate()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_group, symmetric_group_3};

    fn z(n: usize) -> Arc<FiniteGroup> {
        Arc::new(cyclic_group(n).unwrap())
    }

    fn trivial_action(g: usize, e: usize) -> Vec<Vec<usize>> {
        (0..g).map(|_| (0..e).collect()).collect()
    }

    #[test]
    fn zero_crossed_module_is_valid() {
        let c = FiniteCrossedComplex::from_crossed_module(z(2), z(2), vec![0, 0], trivial_action(2, 2)).unwrap();
        assert!(c.validate().ok());
        assert_eq!(c.pi1().unwrap().order(), 2);
        assert_eq!(c.homology(2).unwrap().order(), 2);
    }

    #[test]
    fn inclusion_crossed_module() {
        let c = FiniteCrossedComplex::from_crossed_module(z(4), z(2), vec![0, 2], trivial_action(4, 2)).unwrap();
        assert!(c.validate().ok());
        assert_eq!(c.len(), 2);
        assert_eq!(c.pi1().unwrap().order(), 2);
        assert_eq!(c.homology(2).unwrap().order(), 1);
        assert_eq!(c.size_at(2).unwrap(), 2);
        assert_eq!(c.size_at(9).unwrap(), 1);
        assert!(c.size_at(0).is_err());
        assert!(c.homology(3).is_err());
        assert!(c.homology(1).is_err());
    }

    #[test]
    fn planted_boundary_defect_is_reported() {
        let c = FiniteCrossedComplex::from_crossed_module(z(4), z(2), vec![0, 2], trivial_action(4, 2)).unwrap();
        let d = GroupHom::new(z(2), z(4), vec![0, 1]).unwrap();
        let bad = FiniteCrossedComplex::from_parts(c.groups().to_vec(), vec![d], c.actions().to_vec()).unwrap();
        let report = bad.validate();
        assert!(!report.ok());
        assert!(report.mentions(axiom::BOUNDARY_HOM));
    }

    #[test]
    fn from_group_basics() {
        let t = FiniteCrossedComplex::from_group(cyclic_group(1).unwrap());
        assert_eq!((t.len(), t.size_at(1).unwrap()), (1, 1));
        let s3 = FiniteCrossedComplex::from_group(symmetric_group_3());
        assert_eq!(s3.len(), 1);
        assert_eq!(s3.size_at(1).unwrap(), 6);
        assert_eq!(s3.pi1().unwrap().order(), 6);
        assert!(FiniteCrossedComplex::from_group(cyclic_group(5).unwrap()).validate().ok());
    }

    #[test]
    fn nontrivial_action_of_z3_on_z2_is_rejected() {
        let act = vec![vec![0, 1], vec![1, 0], vec![1, 0]];
        let err = FiniteCrossedComplex::from_crossed_module(z(3), z(2), vec![0, 0], act).unwrap_err();
        match err {
            Error::InvalidComplex(report) => assert!(report.mentions(axiom::ACTION)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn peiffer_violation_is_named() {
        // identity boundary S3 -> S3 with trivial action breaks Peiffer and CM1
        let s3 = Arc::new(symmetric_group_3());
        let d = GroupHom::identity(s3.clone());
        let act = GroupAction::trivial(s3.clone(), s3.clone());
        let report = FiniteCrossedComplex::from_parts(vec![s3.clone(), s3], vec![d], vec![act])
            .unwrap()
            .validate();
        assert!(report.mentions(axiom::PEIFFER));
        assert!(report.mentions(axiom::CM1));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let d = GroupHom::new(z(2), z(4), vec![0, 2]).unwrap();
        let act = GroupAction::trivial(z(4), z(2));
        assert!(FiniteCrossedComplex::from_parts(vec![z(4)], vec![d.clone()], vec![act.clone()]).is_err());
        assert!(FiniteCrossedComplex::from_parts(vec![z(3), z(2)], vec![d], vec![act]).is_err());
    }
}
