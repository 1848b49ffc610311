//! Named coefficient objects used by the tests, the self-check and the CLI.

use std::sync::Arc;

use crate::crossed::FiniteCrossedComplex;
use crate::group::{cyclic_group, symmetric_group_3, FiniteGroup, GroupAction, GroupHom};

fn z(n: usize) -> Arc<FiniteGroup> {
    Arc::new(cyclic_group(n).expect("n >= 1"))
}

fn inversion(actor: &Arc<FiniteGroup>, space: &Arc<FiniteGroup>) -> GroupAction {
    // the nonidentity element of Z/2 acts by inversion
    let rows = actor
        .elements()
        .map(|g| space.elements().map(|e| if g == 0 { e } else { space.inv(e) }).collect())
        .collect();
    GroupAction::new(actor.clone(), space.clone(), rows).expect("shapes agree")
}

pub fn group_z2() -> FiniteCrossedComplex {
    FiniteCrossedComplex::from_group(cyclic_group(2).unwrap()).with_name("Z/2")
}

pub fn group_z3() -> FiniteCrossedComplex {
    FiniteCrossedComplex::from_group(cyclic_group(3).unwrap()).with_name("Z/3")
}

pub fn group_s3() -> FiniteCrossedComplex {
    FiniteCrossedComplex::from_group(symmetric_group_3()).with_name("S3")
}

/// `Z/2 --0--> Z/2`, trivial action.
pub fn xm_z2_z2_zero() -> FiniteCrossedComplex {
    let (g, e) = (z(2), z(2));
    FiniteCrossedComplex::new(
        vec![g.clone(), e.clone()],
        vec![GroupHom::trivial(e.clone(), g.clone())],
        vec![GroupAction::trivial(g, e)],
    )
    .expect("valid crossed module")
    .with_name("(Z/2,Z/2,zero)")
}

/// `Z/2 --(1 ↦ 2)--> Z/4`, trivial action.
pub fn xm_z4_z2_incl() -> FiniteCrossedComplex {
    let (g, e) = (z(4), z(2));
    FiniteCrossedComplex::new(
        vec![g.clone(), e.clone()],
        vec![GroupHom::new(e.clone(), g.clone(), vec![0, 2]).unwrap()],
        vec![GroupAction::trivial(g, e)],
    )
    .expect("valid crossed module")
    .with_name("(Z/4,Z/2,incl)")
}

/// `Z/2 -> Z/2 -> Z/4`: `∂₃ = 0`, `∂₂` the inclusion, trivial actions.
pub fn l3_z4() -> FiniteCrossedComplex {
    let (a1, a2, a3) = (z(4), z(2), z(2));
    FiniteCrossedComplex::new(
        vec![a1.clone(), a2.clone(), a3.clone()],
        vec![
            GroupHom::new(a2.clone(), a1.clone(), vec![0, 2]).unwrap(),
            GroupHom::trivial(a3.clone(), a2.clone()),
        ],
        vec![GroupAction::trivial(a1.clone(), a2), GroupAction::trivial(a1, a3)],
    )
    .expect("valid crossed complex")
    .with_name("(Z/4,Z/2,Z/2)")
}

/// `S3 --id--> S3` with conjugation.
pub fn xm_s3_conj() -> FiniteCrossedComplex {
    let s3 = Arc::new(symmetric_group_3());
    FiniteCrossedComplex::new(
        vec![s3.clone(), s3.clone()],
        vec![GroupHom::identity(s3.clone())],
        vec![GroupAction::conjugation(s3)],
    )
    .expect("valid crossed module")
    .with_name("(S3,S3,id)")
}

/// `A3 ≅ Z/3 ↪ S3` with conjugation.
pub fn xm_s3_a3() -> FiniteCrossedComplex {
    let s3 = Arc::new(symmetric_group_3());
    let a3 = z(3);
    // 1 ↦ (123), 2 ↦ (132)
    let incl = GroupHom::new(a3.clone(), s3.clone(), vec![0, 4, 5]).unwrap();
    let act = GroupAction::conjugation_via(&GroupHom::identity(s3.clone()), a3.clone(), &incl).unwrap();
    FiniteCrossedComplex::new(vec![s3, a3], vec![incl], vec![act])
        .expect("valid crossed module")
        .with_name("(S3,Z/3,incl)")
}

/// `Z/3 --0--> Z/2` with `Z/2` acting by inversion.
pub fn xm_z2_z3_inv() -> FiniteCrossedComplex {
    let (g, e) = (z(2), z(3));
    let act = inversion(&g, &e);
    FiniteCrossedComplex::new(vec![g.clone(), e.clone()], vec![GroupHom::trivial(e, g)], vec![act])
        .expect("valid crossed module")
        .with_name("(Z/2,Z/3,zero,inv)")
}

/// `Z/3 --id--> Z/3 --0--> Z/2`, `Z/2` acting by inversion in both degrees.
pub fn l3_twisted() -> FiniteCrossedComplex {
    let (a1, a2, a3) = (z(2), z(3), z(3));
    FiniteCrossedComplex::new(
        vec![a1.clone(), a2.clone(), a3.clone()],
        vec![GroupHom::trivial(a2.clone(), a1.clone()), GroupHom::new(a3.clone(), a2.clone(), vec![0, 1, 2]).unwrap()],
        vec![inversion(&a1, &a2), inversion(&a1, &a3)],
    )
    .expect("valid crossed complex")
    .with_name("(Z/2,Z/3,Z/3,inv)")
}

/// The standard coefficient suite: three groups, two crossed modules and one
/// length-3 complex.
pub fn standard_suite() -> Vec<FiniteCrossedComplex> {
    vec![group_z2(), group_z3(), group_s3(), xm_z2_z2_zero(), xm_z4_z2_incl(), l3_z4()]
}

/// The standard suite plus complexes with nontrivial actions.
pub fn extended_suite() -> Vec<FiniteCrossedComplex> {
    let mut all = standard_suite();
    all.extend([xm_s3_conj(), xm_s3_a3(), xm_z2_z3_inv(), l3_twisted()]);
    all
}

/// Looks a complex up by the name it carries, e.g. `S3` or `(Z/4,Z/2,incl)`.
pub fn by_name(name: &str) -> Option<FiniteCrossedComplex> {
    extended_suite().into_iter().find(|c| c.name() == Some(name.trim()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_member_is_valid() {
        for c in extended_suite() {
            assert!(c.validate().ok(), "{c}: {}", c.validate());
        }
    }

    #[test]
    fn homotopy_groups_of_suite_members() {
        let orders = |c: &FiniteCrossedComplex| {
            let mut v = vec![c.pi1().unwrap().order()];
            v.extend((2..=c.len()).map(|n| c.homology(n).unwrap().order()));
            v
        };
        assert_eq!(orders(&xm_z4_z2_incl()), vec![2, 1]);
        assert_eq!(orders(&xm_z2_z2_zero()), vec![2, 2]);
        assert_eq!(orders(&l3_z4()), vec![2, 1, 2]);
        assert_eq!(orders(&xm_s3_conj()), vec![1, 1]);
        assert_eq!(orders(&xm_s3_a3()), vec![2, 1]);
        assert_eq!(orders(&l3_twisted()), vec![2, 1, 1]);
        assert_eq!(orders(&group_s3()), vec![6]);
    }

    #[test]
    fn factoring_property_holds_column_wise() {
        for c in extended_suite() {
            if c.len() < 3 {
                continue;
            }
            let img = c.boundary(2).images().to_vec();
            for n in 3..=c.len() {
                for &x in &img {
                    for a in c.group(n).elements() {
                        assert_eq!(c.action(n).act(x, a), a);
                    }
                }
            }
        }
    }

    #[test]
    fn lookup() {
        assert_eq!(by_name("S3").unwrap().size_at(1).unwrap(), 6);
        assert!(by_name("nope").is_none());
    }
}
