//! Colourings of cells and the evaluation of attaching data under them.

use std::fmt;

use crate::crossed::FiniteCrossedComplex;
use crate::error::{Error, Result};
use crate::presentation::{Attach, CWPresentation, CrossedWord, ModuleElt, Sign, Word};

/// A crossed-complex morphism from the fundamental crossed complex of a
/// presentation, stored as its values on cells.
///
/// `colours[n - 1][c]` is the element of `A_n` assigned to the `c`-th
/// `n`-cell, for `1 <= n <= L`. Cells above `L` are implicitly trivial.
/// The derived ordering is lexicographic by (dimension, cell, element).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Morphism {
    pub colours: Vec<Vec<usize>>,
}

impl Morphism {
    pub fn new(colours: Vec<Vec<usize>>) -> Self {
        Morphism { colours }
    }

    /// Values on the `n`-cells.
    pub fn on(&self, n: usize) -> &[usize] {
        &self.colours[n - 1]
    }

    /// Checks every boundary-compatibility and kill constraint.
    pub fn verify(&self, p: &CWPresentation, a: &FiniteCrossedComplex) -> std::result::Result<(), String> {
        let len = a.len();
        if self.colours.len() != len {
            return Err(format!("expected colours in {len} dimensions, got {}", self.colours.len()));
        }
        for n in 1..=len {
            let row = &self.colours[n - 1];
            if row.len() != p.cell_count(n) {
                return Err(format!("dimension {n}: {} colours for {} cells", row.len(), p.cell_count(n)));
            }
            if let Some(c) = row.iter().position(|&v| v >= a.group(n).order()) {
                return Err(format!("dimension {n}: colour of cell {c} is out of range"));
            }
        }
        for n in 2..=len + 1 {
            for c in 0..p.cell_count(n) {
                let value = eval_attach(a, p, &self.colours, n, c).map_err(|e| e.to_string())?;
                let expected = if n <= len { a.boundary(n).apply(self.colours[n - 1][c]) } else { 0 };
                if value != expected {
                    return Err(if n <= len {
                        format!("cell {c} of dimension {n}: boundary {expected} != attaching value {value}")
                    } else {
                        format!("cell {c} of dimension {n}: attaching value {value} is not killed")
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, p: &CWPresentation, a: &FiniteCrossedComplex) -> bool {
        self.verify(p, a).is_ok()
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .colours
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let vals: Vec<String> = row.iter().map(ToString::to_string).collect();
                format!("f{}=[{}]", i + 1, vals.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn check_word(f1: &[usize], w: &Word) -> Result<()> {
    match w.letters().iter().find(|l| l.gen >= f1.len()) {
        Some(l) => Err(Error::IndexOutOfRange(format!("1-cell {} has no colour", l.gen))),
        None => Ok(()),
    }
}

#[inline]
pub(crate) fn eval_word_unchecked(a: &FiniteCrossedComplex, f1: &[usize], w: &Word) -> usize {
    let g = a.group(1);
    w.letters().iter().fold(0, |acc, l| {
        let x = f1[l.gen];
        g.mul(acc, if l.sign == Sign::Pos { x } else { g.inv(x) })
    })
}

/// Product over letters of `f₁(gen)^{±1}` in `A_1`.
pub fn eval_word(a: &FiniteCrossedComplex, f1: &[usize], w: &Word) -> Result<usize> {
    check_word(f1, w)?;
    if let Some(&x) = f1.iter().find(|&&x| x >= a.group(1).order()) {
        return Err(Error::IndexOutOfRange(format!("colour {x} outside A_1")));
    }
    Ok(eval_word_unchecked(a, f1, w))
}

/// Product over terms of `(f₁(conj) ▷ f₂(gen))^{±1}` in `A_2`.
pub fn eval_crossed(a: &FiniteCrossedComplex, f1: &[usize], f2: &[usize], cw: &CrossedWord) -> Result<usize> {
    if a.len() < 2 {
        return Err(Error::IndexOutOfRange("crossed words need L >= 2".into()));
    }
    let a2 = a.group(2);
    let act = a.action(2);
    let mut acc = 0;
    for t in cw.terms() {
        check_word(f1, &t.conj)?;
        let v = *f2
            .get(t.gen)
            .ok_or_else(|| Error::IndexOutOfRange(format!("2-cell {} has no colour", t.gen)))?;
        let twisted = act.act(eval_word_unchecked(a, f1, &t.conj), v);
        acc = a2.mul(acc, if t.sign == Sign::Pos { twisted } else { a2.inv(twisted) });
    }
    Ok(acc)
}

/// Sum over terms of `coef · (f₁(twist) ▷ f_k(gen))` in the abelian `A_k`.
pub fn eval_module(a: &FiniteCrossedComplex, f1: &[usize], fk: &[usize], m: &ModuleElt, k: usize) -> Result<usize> {
    if k < 3 {
        return Err(Error::IndexOutOfRange(format!("module elements live in degree >= 3, got {k}")));
    }
    if a.len() < k {
        return Err(Error::IndexOutOfRange(format!("degree {k} above truncation {}", a.len())));
    }
    let ak = a.group(k);
    let act = a.action(k);
    let mut acc = 0;
    for t in m.terms() {
        check_word(f1, &t.twist)?;
        let v = *fk
            .get(t.gen)
            .ok_or_else(|| Error::IndexOutOfRange(format!("{k}-cell {} has no colour", t.gen)))?;
        acc = ak.mul(acc, ak.pow(act.act(eval_word_unchecked(a, f1, &t.twist), v), t.coef));
    }
    Ok(acc)
}

/// Value in `A_{n-1}` of the attaching data of the `c`-th `n`-cell under the
/// colours of dimensions below `n`.
pub fn eval_attach(a: &FiniteCrossedComplex, p: &CWPresentation, colours: &[Vec<usize>], n: usize, c: usize) -> Result<usize> {
    match p.attach(n, c) {
        Attach::Word(w) => eval_word(a, &colours[0], w),
        Attach::Crossed(cw) => eval_crossed(a, &colours[0], &colours[1], cw),
        Attach::Module(m) => eval_module(a, &colours[0], &colours[n - 2], m, n - 1),
    }
}

/// For each cell of dimension `>= 3` (up to `L + 1`), the value in
/// `A_{n-2}` of its boundary-of-boundary under `f`. A genuine CW
/// presentation gives the identity everywhere; nonidentity entries are
/// returned as `(dimension, cell, value)`.
pub fn boundary_defects(a: &FiniteCrossedComplex, p: &CWPresentation, f: &Morphism) -> Vec<(usize, usize, usize)> {
    let mut defects = Vec::new();
    let f1 = &f.colours[0];
    let top = (a.len() + 1).min(p.dim());
    for n in 3..=top {
        for c in 0..p.cell_count(n) {
            let value = match p.attach(n, c) {
                Attach::Crossed(cw) => eval_word_unchecked(a, f1, &cw.boundary_word(p.attach2())),
                Attach::Module(m) => {
                    // Σ coef · twist ▷ (value of the (n-1)-cell's own attaching data)
                    let below = n - 2;
                    if below > a.len() {
                        continue;
                    }
                    let g = a.group(below);
                    let mut acc = 0;
                    for t in m.terms() {
                        let inner = match eval_attach(a, p, &f.colours, n - 1, t.gen) {
                            Ok(v) => v,
                            Err(_) => continue,
                        };
                        let actor = eval_word_unchecked(a, f1, &t.twist);
                        let twisted = if below == 1 { g.conjugate(actor, inner) } else { a.action(below).act(actor, inner) };
                        acc = g.mul(acc, g.pow(twisted, t.coef));
                    }
                    acc
                }
                Attach::Word(_) => 0,
            };
            if value != 0 {
                defects.push((n, c, value));
            }
        }
    }
    defects
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_group, symmetric_group_3, GroupAction};
    use crate::presentation::{CrossedTerm, ModuleTerm};
    use crate::suite;
    use std::sync::Arc;

    fn w(pairs: &[(usize, i64)]) -> Word {
        Word::from_pairs(pairs).unwrap()
    }

    #[test]
    fn word_evaluation() {
        let z3 = FiniteCrossedComplex::from_group(cyclic_group(3).unwrap());
        assert_eq!(eval_word(&z3, &[2], &w(&[(0, 1), (0, -1)])).unwrap(), 0);
        assert_eq!(eval_word(&z3, &[1], &w(&[(0, 1), (0, 1)])).unwrap(), 2);
        assert_eq!(eval_word(&z3, &[1], &Word::empty()).unwrap(), 0);
        assert!(eval_word(&z3, &[1], &w(&[(1, 1)])).is_err());

        let s3 = symmetric_group_3();
        let g = s3.clone();
        let a = FiniteCrossedComplex::from_group(s3);
        let commutator = eval_word(&a, &[1, 2], &w(&[(0, 1), (1, 1), (0, -1), (1, -1)])).unwrap();
        let expected = g.mul(g.mul(1, 2), g.mul(g.inv(1), g.inv(2)));
        assert_eq!(commutator, expected);
        assert!(commutator == 4 || commutator == 5, "a 3-cycle");
    }

    #[test]
    fn crossed_evaluation() {
        let xm = suite::xm_z4_z2_incl();
        let single = CrossedWord(vec![CrossedTerm { conj: Word::empty(), gen: 0, sign: Sign::Pos }]);
        assert_eq!(eval_crossed(&xm, &[], &[1], &single).unwrap(), 1);
        let inv = CrossedWord(vec![CrossedTerm { conj: w(&[(0, 1)]), gen: 0, sign: Sign::Neg }]);
        assert_eq!(eval_crossed(&xm, &[3], &[1], &inv).unwrap(), 1);
        assert!(eval_crossed(&FiniteCrossedComplex::from_group(cyclic_group(2).unwrap()), &[], &[], &CrossedWord::empty()).is_err());

        // nontrivial action: S3 on itself by conjugation
        let s3 = suite::xm_s3_conj();
        let g = s3.group(2).clone();
        let act = GroupAction::conjugation(Arc::new(symmetric_group_3()));
        let cw = CrossedWord(vec![
            CrossedTerm { conj: w(&[(0, 1)]), gen: 0, sign: Sign::Pos },
            CrossedTerm { conj: w(&[(1, -1)]), gen: 1, sign: Sign::Neg },
        ]);
        let (f1, f2) = ([1usize, 4], [2usize, 3]);
        let first = act.act(1, 2);
        let second = g.inv(act.act(g.inv(4), 3));
        assert_eq!(eval_crossed(&s3, &f1, &f2, &cw).unwrap(), g.mul(first, second));
    }

    #[test]
    fn module_evaluation() {
        let l3 = suite::l3_z4();
        let zero = ModuleElt::zero();
        assert_eq!(eval_module(&l3, &[], &[1], &zero, 3).unwrap(), 0);
        let one = ModuleElt(vec![ModuleTerm { coef: 1, twist: Word::empty(), gen: 0 }]);
        assert_eq!(eval_module(&l3, &[], &[1], &one, 3).unwrap(), 1);
        assert!(eval_module(&l3, &[], &[1], &one, 2).is_err());
        assert!(eval_module(&l3, &[], &[1], &one, 4).is_err());

        // A_3 = Z/4, trivial action: -2·1 = 2
        let z4 = Arc::new(cyclic_group(4).unwrap());
        let z2 = Arc::new(cyclic_group(2).unwrap());
        let a = FiniteCrossedComplex::new(
            vec![z2.clone(), z2.clone(), z4.clone()],
            vec![
                crate::group::GroupHom::trivial(z2.clone(), z2.clone()),
                crate::group::GroupHom::trivial(z4.clone(), z2.clone()),
            ],
            vec![GroupAction::trivial(z2.clone(), z2.clone()), GroupAction::trivial(z2, z4)],
        )
        .unwrap();
        let m = ModuleElt(vec![ModuleTerm { coef: -2, twist: w(&[(0, 1)]), gen: 0 }]);
        assert_eq!(eval_module(&a, &[1], &[1], &m, 3).unwrap(), 2);

        // twisted: Z/2 acts on Z/3 by inversion
        let tw = suite::l3_twisted();
        let m = ModuleElt(vec![
            ModuleTerm { coef: 1, twist: w(&[(0, 1)]), gen: 0 },
            ModuleTerm { coef: 2, twist: Word::empty(), gen: 0 },
        ]);
        // (-1) + 2·1 = 1 in Z/3 with f₁(x) = 1, f₃(c) = 1
        assert_eq!(eval_module(&tw, &[1], &[1], &m, 3).unwrap(), 1);
    }
}
