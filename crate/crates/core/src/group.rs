//! Finite groups stored as multiplication tables.
//!
//! Elements are the dense indices `0..order`, and index `0` is always the
//! identity. Tables are validated once at construction and never mutated
//! afterwards, so a [`FiniteGroup`] can be shared freely between threads
//! (usually behind an [`Arc`]).

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite group given by its full multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    name: Option<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

impl FiniteGroup {
    /// Validates a multiplication table and derives the inverse table.
    ///
    /// Checks run in a fixed order: shape, identity at `0`, inverses,
    /// associativity. The error names the first violating tuple.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::EmptyGroup);
        }
        let mut mul = Vec::with_capacity(n * n);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::MalformedTable { row, col: entries.len().min(n) });
            }
            for (col, &v) in entries.iter().enumerate() {
                if v >= n {
                    return Err(Error::MalformedTable { row, col });
                }
                mul.push(v);
            }
        }
        Self::from_flat(n, mul)
    }

    fn from_flat(n: usize, mul: Vec<usize>) -> Result<Self> {
        for x in 0..n {
            if mul[x] != x || mul[x * n] != x {
                return Err(Error::NoIdentityAtZero { element: x });
            }
        }
        let mut inv = vec![usize::MAX; n];
        for x in 0..n {
            let y = (0..n).find(|&y| mul[x * n + y] == 0 && mul[y * n + x] == 0);
            match y {
                Some(y) => inv[x] = y,
                None => return Err(Error::MissingInverse { element: x }),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mul[a * n + b];
                for c in 0..n {
                    if mul[ab * n + c] != mul[a * n + mul[b * n + c]] {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(FiniteGroup { order: n, mul, inv, name: None })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `a^k` for any integer `k`; negative powers go through the inverse.
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let mut base = if k < 0 { self.inv(a) } else { a };
        let mut e = k.unsigned_abs();
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `g x g⁻¹`
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.commuting_witness().is_none()
    }

    /// First pair `(a, b)` with `ab != ba`, if any.
    pub fn commuting_witness(&self) -> Option<(usize, usize)> {
        for a in self.elements() {
            for b in (a + 1)..self.order {
                if self.mul(a, b) != self.mul(b, a) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn center(&self) -> Vec<usize> {
        self.elements()
            .filter(|&z| self.elements().all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }
}

/// The cyclic group `Z/n` with `mul(a, b) = (a + b) mod n`.
pub fn cyclic_group(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidArgument("cyclic group order must be at least 1".into()));
    }
    let mul = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    Ok(FiniteGroup::from_flat(n, mul)?.with_name(format!("Z/{n}")))
}

/// `G × H` with the pair `(g, h)` stored at index `g·|H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (m, k) = (g.order(), h.order());
    let n = m * k;
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            mul.push(g.mul(a / k, b / k) * k + h.mul(a % k, b % k));
        }
    }
    let name = format!(
        "{}x{}",
        g.name().unwrap_or("G"),
        h.name().unwrap_or("H")
    );
    FiniteGroup::from_flat(n, mul)
        .expect("direct product of groups is a group")
        .with_name(name)
}

/// Permutations of `{1,2,3}` in the order used by [`symmetric_group_3`].
pub const S3_ELEMENTS: [[usize; 3]; 6] = [
    [0, 1, 2], // 0: e
    [1, 0, 2], // 1: (12)
    [2, 1, 0], // 2: (13)
    [0, 2, 1], // 3: (23)
    [1, 2, 0], // 4: (123)
    [2, 0, 1], // 5: (132)
];

/// The symmetric group on three letters.
///
/// Element `i` is the permutation `S3_ELEMENTS[i]` (the image of `0, 1, 2`):
/// `0 = e, 1 = (12), 2 = (13), 3 = (23), 4 = (123), 5 = (132)`. The product
/// `a·b` is the composite "apply `b` first, then `a`".
pub fn symmetric_group_3() -> FiniteGroup {
    let idx = |p: [usize; 3]| S3_ELEMENTS.iter().position(|q| *q == p).unwrap();
    let mut mul = Vec::with_capacity(36);
    for a in S3_ELEMENTS {
        for b in S3_ELEMENTS {
            mul.push(idx([a[b[0]], a[b[1]], a[b[2]]]));
        }
    }
    FiniteGroup::from_flat(6, mul)
        .expect("S3 table is a group")
        .with_name("S3")
}

/// A map of element indices between two groups. Construction only checks the
/// shape; [`GroupHom::check`] decides whether it is a homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    image: Vec<usize>,
}

/// Witness that a map fails to be a homomorphism: `h(xy) != h(x)h(y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomViolation {
    pub x: usize,
    pub y: usize,
}

impl GroupHom {
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, image: Vec<usize>) -> Result<Self> {
        if image.len() != source.order() {
            return Err(Error::DimensionMismatch(format!(
                "map has {} entries, source has order {}",
                image.len(),
                source.order()
            )));
        }
        if let Some(i) = image.iter().position(|&v| v >= target.order()) {
            return Err(Error::DimensionMismatch(format!(
                "map entry {i} = {} is outside a target of order {}",
                image[i],
                target.order()
            )));
        }
        Ok(GroupHom { source, target, image })
    }

    pub fn identity(group: Arc<FiniteGroup>) -> Self {
        let image = group.elements().collect();
        GroupHom { source: group.clone(), target: group, image }
    }

    pub fn trivial(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>) -> Self {
        let image = vec![0; source.order()];
        GroupHom { source, target, image }
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn check(&self) -> Option<HomViolation> {
        let (s, t) = (&*self.source, &*self.target);
        for x in s.elements() {
            for y in s.elements() {
                if self.image[s.mul(x, y)] != t.mul(self.image[x], self.image[y]) {
                    return Some(HomViolation { x, y });
                }
            }
        }
        None
    }

    pub fn is_hom(&self) -> bool {
        self.check().is_none()
    }

    /// Source elements grouped by their image, indexed by target element.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut fibers = vec![Vec::new(); self.target.order()];
        for (x, &y) in self.image.iter().enumerate() {
            fibers[y].push(x);
        }
        fibers
    }

    /// The image as a subgroup of the target. Normality is not assumed; ask
    /// the returned [`Subgroup`].
    pub fn image_subgroup(&self) -> Result<Subgroup> {
        let members: BTreeSet<usize> = self.image.iter().copied().collect();
        Subgroup::new(self.target.clone(), members.into_iter().collect())
    }

    pub fn kernel(&self) -> Result<NormalSubgroup> {
        let members = self
            .image
            .iter()
            .enumerate()
            .filter(|&(_, &y)| y == 0)
            .map(|(x, _)| x)
            .collect();
        NormalSubgroup::new(self.source.clone(), members)
    }
}

pub fn check_hom(h: &GroupHom) -> bool {
    h.is_hom()
}

pub fn image_of(h: &GroupHom) -> Result<Subgroup> {
    h.image_subgroup()
}

pub fn kernel_of(h: &GroupHom) -> Result<NormalSubgroup> {
    h.kernel()
}

pub fn fibers_of(h: &GroupHom) -> Vec<Vec<usize>> {
    h.fibers()
}

/// A left action of `actor` on `space`, as a table `act[g][e]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    actor: Arc<FiniteGroup>,
    space: Arc<FiniteGroup>,
    table: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionViolation {
    /// `0 ▷ e != e`
    Identity { e: usize },
    /// `(g h) ▷ e != g ▷ (h ▷ e)`
    Composition { g: usize, h: usize, e: usize },
    /// `g ▷ (e f) != (g ▷ e)(g ▷ f)`
    NotAutomorphism { g: usize, e: usize, f: usize },
}

impl GroupAction {
    pub fn new(actor: Arc<FiniteGroup>, space: Arc<FiniteGroup>, table: Vec<Vec<usize>>) -> Result<Self> {
        if table.len() != actor.order() {
            return Err(Error::DimensionMismatch(format!(
                "action table has {} rows, actor has order {}",
                table.len(),
                actor.order()
            )));
        }
        let mut flat = Vec::with_capacity(actor.order() * space.order());
        for (g, row) in table.iter().enumerate() {
            if row.len() != space.order() {
                return Err(Error::DimensionMismatch(format!(
                    "action row {g} has {} entries, space has order {}",
                    row.len(),
                    space.order()
                )));
            }
            if let Some(e) = row.iter().position(|&v| v >= space.order()) {
                return Err(Error::DimensionMismatch(format!(
                    "action entry ({g}, {e}) = {} is outside a space of order {}",
                    row[e],
                    space.order()
                )));
            }
            flat.extend_from_slice(row);
        }
        Ok(GroupAction { actor, space, table: flat })
    }

    pub fn trivial(actor: Arc<FiniteGroup>, space: Arc<FiniteGroup>) -> Self {
        let table = (0..actor.order()).flat_map(|_| space.elements()).collect();
        GroupAction { actor, space, table }
    }

    /// Conjugation action of a group on itself.
    pub fn conjugation(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        let table = (0..n * n).map(|i| group.conjugate(i / n, i % n)).collect();
        GroupAction { actor: group.clone(), space: group, table }
    }

    /// Action through a homomorphism `phi: actor -> space`, by conjugation in
    /// `space`. Used for normal-subgroup style crossed modules.
    pub fn conjugation_via(phi: &GroupHom, space: Arc<FiniteGroup>, embed: &GroupHom) -> Result<Self> {
        // g ▷ e = embed⁻¹(phi(g) · embed(e) · phi(g)⁻¹)
        let big = embed.target().clone();
        if !Arc::ptr_eq(phi.target(), &big) && **phi.target() != *big {
            return Err(Error::DimensionMismatch("conjugation_via: phi and embed disagree on the ambient group".into()));
        }
        let back = {
            let mut back = vec![usize::MAX; big.order()];
            for (e, &v) in embed.images().iter().enumerate() {
                back[v] = e;
            }
            back
        };
        let actor = phi.source().clone();
        let mut table = Vec::with_capacity(actor.order() * space.order());
        for g in actor.elements() {
            for e in space.elements() {
                let v = back[big.conjugate(phi.apply(g), embed.apply(e))];
                if v == usize::MAX {
                    return Err(Error::NotNormal { member: e, by: g });
                }
                table.push(v);
            }
        }
        Ok(GroupAction { actor, space, table })
    }

    pub fn actor(&self) -> &Arc<FiniteGroup> {
        &self.actor
    }

    pub fn space(&self) -> &Arc<FiniteGroup> {
        &self.space
    }

    #[inline]
    pub fn act(&self, g: usize, e: usize) -> usize {
        self.table[g * self.space.order() + e]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.space.order().max(1)).map(<[usize]>::to_vec).collect()
    }

    pub fn is_trivial(&self) -> bool {
        let n = self.space.order();
        self.table.iter().enumerate().all(|(i, &v)| v == i % n)
    }

    pub fn check(&self) -> Option<ActionViolation> {
        let (a, s) = (&*self.actor, &*self.space);
        for e in s.elements() {
            if self.act(0, e) != e {
                return Some(ActionViolation::Identity { e });
            }
        }
        for g in a.elements() {
            for h in a.elements() {
                for e in s.elements() {
                    if self.act(a.mul(g, h), e) != self.act(g, self.act(h, e)) {
                        return Some(ActionViolation::Composition { g, h, e });
                    }
                }
            }
        }
        for g in a.elements() {
            for e in s.elements() {
                for f in s.elements() {
                    if self.act(g, s.mul(e, f)) != s.mul(self.act(g, e), self.act(g, f)) {
                        return Some(ActionViolation::NotAutomorphism { g, e, f });
                    }
                }
            }
        }
        None
    }

    pub fn is_action(&self) -> bool {
        self.check().is_none()
    }
}

pub fn check_action(a: &GroupAction) -> bool {
    a.is_action()
}

/// A validated subgroup: contains `0`, closed under products and inverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: Vec<usize>,
}

impl Subgroup {
    pub fn new(parent: Arc<FiniteGroup>, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if let Some(&m) = members.iter().find(|&&m| m >= parent.order()) {
            return Err(Error::NotSubgroup(format!("element {m} is outside the parent group")));
        }
        if members.first() != Some(&0) {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        let mut mask = vec![false; parent.order()];
        for &m in &members {
            mask[m] = true;
        }
        for &a in &members {
            if !mask[parent.inv(a)] {
                return Err(Error::NotSubgroup(format!("inverse of {a} missing")));
            }
            for &b in &members {
                if !mask[parent.mul(a, b)] {
                    return Err(Error::NotSubgroup(format!("product {a}*{b} missing")));
                }
            }
        }
        Ok(Subgroup { parent, members })
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// First `(member, g)` with `g·member·g⁻¹` outside the subgroup.
    pub fn normality_witness(&self) -> Option<(usize, usize)> {
        for g in self.parent.elements() {
            for &m in &self.members {
                if !self.contains(self.parent.conjugate(g, m)) {
                    return Some((m, g));
                }
            }
        }
        None
    }

    pub fn is_normal(&self) -> bool {
        self.normality_witness().is_none()
    }

    pub fn into_normal(self) -> Result<NormalSubgroup> {
        match self.normality_witness() {
            Some((member, by)) => Err(Error::NotNormal { member, by }),
            None => Ok(NormalSubgroup(self)),
        }
    }

    /// The subgroup as a table group in its own right, with members
    /// renumbered in increasing order, plus the inclusion into the parent.
    pub fn to_group(&self) -> (FiniteGroup, GroupHom) {
        let k = self.members.len();
        let local = |x: usize| self.members.binary_search(&x).expect("closed subgroup");
        let mut mul = Vec::with_capacity(k * k);
        for &a in &self.members {
            for &b in &self.members {
                mul.push(local(self.parent.mul(a, b)));
            }
        }
        let group = Arc::new(FiniteGroup::from_flat(k, mul).expect("subgroup of a group is a group"));
        let incl = GroupHom {
            source: group.clone(),
            target: self.parent.clone(),
            image: self.members.clone(),
        };
        (FiniteGroup::clone(&group), incl)
    }
}

/// A subgroup known to be normal in its parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalSubgroup(Subgroup);

impl NormalSubgroup {
    pub fn new(parent: Arc<FiniteGroup>, members: Vec<usize>) -> Result<Self> {
        Subgroup::new(parent, members)?.into_normal()
    }

    pub fn trivial(parent: Arc<FiniteGroup>) -> Self {
        NormalSubgroup(Subgroup { parent, members: vec![0] })
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.0
    }

    pub fn members(&self) -> &[usize] {
        self.0.members()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.contains(x)
    }
}

/// `G / N` over least-index coset representatives.
///
/// Quotient element `i` is the coset whose least member is the `i`-th
/// smallest representative, so the identity coset is `0`.
pub fn quotient(group: &Arc<FiniteGroup>, normal: &NormalSubgroup) -> Result<(FiniteGroup, GroupHom)> {
    if normal.subgroup().parent() != group {
        return Err(Error::DimensionMismatch("normal subgroup belongs to a different group".into()));
    }
    let n = group.order();
    let mut coset = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for g in group.elements() {
        if coset[g] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(g);
        for &m in normal.members() {
            coset[group.mul(g, m)] = id;
        }
    }
    let q = reps.len();
    let mut mul = Vec::with_capacity(q * q);
    for &a in &reps {
        for &b in &reps {
            mul.push(coset[group.mul(a, b)]);
        }
    }
    let quotient = Arc::new(FiniteGroup::from_flat(q, mul)?);
    let projection = GroupHom { source: group.clone(), target: quotient.clone(), image: coset };
    Ok((FiniteGroup::clone(&quotient), projection))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> Arc<FiniteGroup> {
        Arc::new(cyclic_group(n).unwrap())
    }

    #[test]
    fn trivial_and_z2_tables() {
        let g = FiniteGroup::from_table(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        let g = FiniteGroup::from_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!((g.inv(0), g.inv(1)), (0, 1));
    }

    #[test]
    fn rejects_non_groups() {
        let err = FiniteGroup::from_table(&[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, Error::MissingInverse { element: 1 });
        let err = FiniteGroup::from_table(&[vec![1, 0], vec![0, 1]]).unwrap_err();
        assert_eq!(err, Error::NoIdentityAtZero { element: 0 });
        let err = FiniteGroup::from_table(&[vec![0, 1], vec![1]]).unwrap_err();
        assert!(matches!(err, Error::MalformedTable { row: 1, .. }));
        // a Latin square with identity 0 that is not associative
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table(&t), Err(Error::NotAssociative { .. })));
    }

    #[test]
    fn standard_constructions() {
        assert_eq!(cyclic_group(1).unwrap().order(), 1);
        assert!(cyclic_group(0).is_err());
        assert_eq!(direct_product(&z(2), &z(3)).order(), 6);
        let s3 = symmetric_group_3();
        // brute-force centre
        let centre: Vec<usize> = s3
            .elements()
            .filter(|&a| s3.elements().all(|b| s3.mul(a, b) == s3.mul(b, a)))
            .collect();
        assert_eq!(centre, vec![0]);
        assert_eq!(s3.center().len(), 1);
        assert!(!s3.is_abelian());
        // (12)(13) = (132) under "right factor first": 1->3->3? check by permutations
        let p = |i: usize| S3_ELEMENTS[i];
        let prod = s3.mul(1, 2);
        let (a, b) = (p(1), p(2));
        assert_eq!(p(prod), [a[b[0]], a[b[1]], a[b[2]]]);
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let g = cyclic_group(5).unwrap();
        assert_eq!(g.pow(2, 3), 1);
        assert_eq!(g.pow(2, -1), 3);
        assert_eq!(g.pow(4, 0), 0);
        let g4 = cyclic_group(4).unwrap();
        assert_eq!(g4.pow(1, -2), 2);
    }

    #[test]
    fn hom_checks() {
        assert!(check_hom(&GroupHom::identity(z(2))));
        let bad = GroupHom::new(z(2), z(3), vec![0, 1]).unwrap();
        assert_eq!(bad.check(), Some(HomViolation { x: 1, y: 1 }));
        assert!(GroupHom::new(z(2), z(3), vec![0]).is_err());
        assert!(GroupHom::new(z(2), z(3), vec![0, 3]).is_err());
        assert!(check_action(&GroupAction::trivial(Arc::new(symmetric_group_3()), z(4))));
    }

    #[test]
    fn action_violations_are_reported() {
        let s3 = Arc::new(symmetric_group_3());
        assert!(GroupAction::conjugation(s3.clone()).is_action());
        // Z/3 acting on Z/2 nontrivially cannot be an action by automorphisms
        let bad = GroupAction::new(z(3), z(2), vec![vec![0, 1], vec![1, 0], vec![0, 1]]).unwrap();
        assert!(!bad.is_action());
    }

    #[test]
    fn inclusion_z2_z4_image_kernel_fibers() {
        let incl = GroupHom::new(z(2), z(4), vec![0, 2]).unwrap();
        assert!(incl.is_hom());
        assert_eq!(image_of(&incl).unwrap().members(), &[0, 2]);
        assert_eq!(kernel_of(&incl).unwrap().members(), &[0]);
        let fibers = fibers_of(&incl);
        assert!(fibers[1].is_empty());
        assert_eq!(fibers[2], vec![1]);
    }

    #[test]
    fn zero_map_and_identity_fibers() {
        let zero = GroupHom::trivial(z(2), z(2));
        assert_eq!(kernel_of(&zero).unwrap().len(), 2);
        let fibers = fibers_of(&zero);
        assert_eq!(fibers[0].len(), 2);
        assert!(fibers[1].is_empty());
        let id = GroupHom::identity(Arc::new(symmetric_group_3()));
        assert!(fibers_of(&id).iter().all(|f| f.len() == 1));
    }

    #[test]
    fn image_normality_is_reported() {
        let s3 = Arc::new(symmetric_group_3());
        let incl = GroupHom::new(z(2), s3.clone(), vec![0, 1]).unwrap();
        assert!(incl.is_hom());
        let img = image_of(&incl).unwrap();
        assert!(!img.is_normal());
        assert!(img.into_normal().is_err());
    }

    #[test]
    fn quotients() {
        let g = z(4);
        let n = NormalSubgroup::new(g.clone(), vec![0, 2]).unwrap();
        let (q, proj) = quotient(&g, &n).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj.images(), &[0, 1, 0, 1]);
        assert!(proj.is_hom());

        let s3 = Arc::new(symmetric_group_3());
        let (q, proj) = quotient(&s3, &NormalSubgroup::trivial(s3.clone())).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(proj.images(), &[0, 1, 2, 3, 4, 5]);

        let a3 = NormalSubgroup::new(s3.clone(), vec![0, 4, 5]).unwrap();
        let (q, proj) = quotient(&s3, &a3).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj.kernel().unwrap().members(), a3.members());

        assert!(matches!(
            NormalSubgroup::new(s3.clone(), vec![0, 1]),
            Err(Error::NotNormal { .. })
        ));
    }

    #[test]
    fn subgroup_to_group_renumbers() {
        let g = z(6);
        let sub = Subgroup::new(g, vec![4, 0, 2]).unwrap();
        let (h, incl) = sub.to_group();
        assert_eq!(h.order(), 3);
        assert!(incl.is_hom());
        assert_eq!(incl.images(), &[0, 2, 4]);
    }
}
