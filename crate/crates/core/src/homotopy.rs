//! 1-fold homotopies between morphisms and the pointed homotopy classes
//! they generate.
//!
//! A homotopy out of a morphism `f` is free data: one element of `A_{n+1}`
//! for every `n`-cell, `1 <= n <= L-1`. Its target is computed on
//! generators by
//!
//! ```text
//! g₁(x) = f₁(x) · ∂₂(H₁(x))
//! gₙ(c) = fₙ(c) · H_{n-1}(∂⁰ₙ c) · ∂_{n+1}(Hₙ(c))     (n >= 2)
//! ```
//!
//! where `H₁` is extended to words as an `f₁`-derivation and the higher
//! `Hₙ` are extended equivariantly.

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use crate::crossed::FiniteCrossedComplex;
use crate::enumerate::{enumerate_homs_with, SearchConfig};
use crate::error::{Error, Result};
use crate::morphism::{eval_word_unchecked, Morphism};
use crate::presentation::{Attach, CWPresentation, CrossedWord, ModuleElt, Sign, Word};
use crate::unionfind::UnionFind;

pub const DEFAULT_EDGE_BUDGET: u64 = 10_000_000;

/// Generator data of a 1-fold homotopy out of `source`.
///
/// `data[n - 1][c]` is the element of `A_{n+1}` on the `c`-th `n`-cell for
/// `1 <= n <= L - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Homotopy1 {
    pub source: Morphism,
    pub data: Vec<Vec<usize>>,
}

impl Homotopy1 {
    /// The homotopy with every value trivial.
    pub fn identity(source: Morphism, p: &CWPresentation, a: &FiniteCrossedComplex) -> Self {
        let data = (1..a.len()).map(|n| vec![0; p.cell_count(n)]).collect();
        Homotopy1 { source, data }
    }

    pub fn on(&self, n: usize) -> &[usize] {
        &self.data[n - 1]
    }
}

/// Value on a word of the `f₁`-derivation with generator values `h1`.
///
/// Folds left to right with `s(w·x) = (f₁(x)⁻¹ ▷ s(w)) · s(x)`; on an
/// inverse letter `s(x⁻¹) = (f₁(x) ▷ h1(x))⁻¹`.
pub fn eval_derivation(a: &FiniteCrossedComplex, f1: &[usize], h1: &[usize], w: &Word) -> Result<usize> {
    if a.len() < 2 {
        return Err(Error::IndexOutOfRange("derivations need L >= 2".into()));
    }
    if let Some(l) = w.letters().iter().find(|l| l.gen >= f1.len() || l.gen >= h1.len()) {
        return Err(Error::IndexOutOfRange(format!("1-cell {} has no value", l.gen)));
    }
    Ok(derivation_unchecked(a, f1, h1, w))
}

fn derivation_unchecked(a: &FiniteCrossedComplex, f1: &[usize], h1: &[usize], w: &Word) -> usize {
    let g1 = a.group(1);
    let e = a.group(2);
    let act = a.action(2);
    let mut acc = 0;
    for l in w.letters() {
        let x = f1[l.gen];
        let (phi, s) = match l.sign {
            Sign::Pos => (x, h1[l.gen]),
            Sign::Neg => (g1.inv(x), e.inv(act.act(x, h1[l.gen]))),
        };
        acc = e.mul(act.act(g1.inv(phi), acc), s);
    }
    acc
}

/// `Π (f₁(conj) ▷ H₂(gen))^{±1}` in `A_3`.
pub fn eval_h2_on_crossed(a: &FiniteCrossedComplex, f1: &[usize], h2: &[usize], cw: &CrossedWord) -> Result<usize> {
    if a.len() < 3 {
        return Err(Error::IndexOutOfRange("H₂ needs L >= 3".into()));
    }
    let g = a.group(3);
    let act = a.action(3);
    let mut acc = 0;
    for t in cw.terms() {
        let v = *h2
            .get(t.gen)
            .ok_or_else(|| Error::IndexOutOfRange(format!("2-cell {} has no value", t.gen)))?;
        let twisted = act.act(eval_word_unchecked(a, f1, &t.conj), v);
        acc = g.mul(acc, if t.sign == Sign::Pos { twisted } else { g.inv(twisted) });
    }
    Ok(acc)
}

/// `Σ coef · (f₁(twist) ▷ H_k(gen))` in `A_{k+1}`, `k >= 3`.
pub fn eval_hk_on_module(a: &FiniteCrossedComplex, f1: &[usize], hk: &[usize], m: &ModuleElt, k: usize) -> Result<usize> {
    if k < 3 || a.len() < k + 1 {
        return Err(Error::IndexOutOfRange(format!("H_{k} on module elements needs 3 <= k < L")));
    }
    let g = a.group(k + 1);
    let act = a.action(k + 1);
    let mut acc = 0;
    for t in m.terms() {
        let v = *hk
            .get(t.gen)
            .ok_or_else(|| Error::IndexOutOfRange(format!("{k}-cell {} has no value", t.gen)))?;
        acc = g.mul(acc, g.pow(act.act(eval_word_unchecked(a, f1, &t.twist), v), t.coef));
    }
    Ok(acc)
}

/// The morphism at the other end of `k`, verified before it is returned.
pub fn homotopy_target(a: &FiniteCrossedComplex, p: &CWPresentation, k: &Homotopy1) -> Result<Morphism> {
    let g = target_unchecked(a, p, &k.source, &k.data)?;
    g.verify(p, a).map_err(Error::TargetNotMorphism)?;
    Ok(g)
}

fn target_unchecked(a: &FiniteCrossedComplex, p: &CWPresentation, f: &Morphism, h: &[Vec<usize>]) -> Result<Morphism> {
    let len = a.len();
    if f.colours.len() != len || h.len() != len.saturating_sub(1) {
        return Err(Error::DimensionMismatch("homotopy data does not match the complex".into()));
    }
    for n in 1..len {
        if h[n - 1].len() != p.cell_count(n) || h[n - 1].iter().any(|&v| v >= a.group(n + 1).order()) {
            return Err(Error::DimensionMismatch(format!("homotopy data in dimension {n} is malformed")));
        }
    }
    let f1 = &f.colours[0];
    let mut colours = f.colours.clone();
    for n in 1..=len {
        let an = a.group(n);
        for c in 0..p.cell_count(n) {
            let mut v = f.colours[n - 1][c];
            if n >= 2 {
                let lower = match p.attach(n, c) {
                    Attach::Word(w) => derivation_unchecked(a, f1, &h[0], w),
                    Attach::Crossed(cw) => eval_h2_on_crossed(a, f1, &h[1], cw)?,
                    Attach::Module(m) => eval_hk_on_module(a, f1, &h[n - 2], m, n - 1)?,
                };
                v = an.mul(v, lower);
            }
            if n < len {
                v = an.mul(v, a.boundary(n + 1).apply(h[n - 1][c]));
            }
            colours[n - 1][c] = v;
        }
    }
    Ok(Morphism::new(colours))
}

/// Number of `fold`-fold homotopies out of any morphism:
/// `Π_k |A_{k+fold}|^{l_k}`.
pub fn count_homotopies_from(p: &CWPresentation, a: &FiniteCrossedComplex, fold: usize) -> BigUint {
    let mut total = BigUint::one();
    for k in 1..=p.dim() {
        let size = a.size_at(k + fold).expect("k + fold >= 1");
        total *= BigUint::from(size).pow(p.cell_count(k) as u32);
    }
    total
}

/// Every 1-fold homotopy out of `f`, as generator data, in lexicographic order.
pub struct HomotopiesFrom {
    radices: Vec<usize>,
    shape: Vec<usize>,
    digits: Vec<usize>,
    done: bool,
}

impl HomotopiesFrom {
    pub fn new(p: &CWPresentation, a: &FiniteCrossedComplex) -> Self {
        let mut radices = Vec::new();
        let mut shape = Vec::new();
        for n in 1..a.len() {
            shape.push(p.cell_count(n));
            radices.extend(std::iter::repeat_n(a.group(n + 1).order(), p.cell_count(n)));
        }
        let digits = vec![0; radices.len()];
        HomotopiesFrom { radices, shape, digits, done: false }
    }
}

impl Iterator for HomotopiesFrom {
    type Item = Vec<Vec<usize>>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let mut out = Vec::with_capacity(self.shape.len());
        let mut k = 0;
        for &len in &self.shape {
            out.push(self.digits[k..k + len].to_vec());
            k += len;
        }
        self.done = true;
        for (d, &r) in self.digits.iter_mut().zip(&self.radices).rev() {
            *d += 1;
            if *d < r {
                self.done = false;
                break;
            }
            *d = 0;
        }
        Some(out)
    }
}

/// Enumerates every homotopy out of `f` and returns how many there are,
/// checking each target along the way.
pub fn enumerate_homotopies_from(a: &FiniteCrossedComplex, p: &CWPresentation, f: &Morphism) -> Result<BigUint> {
    let mut count = BigUint::from(0u32);
    for data in HomotopiesFrom::new(p, a) {
        let g = target_unchecked(a, p, f, &data)?;
        g.verify(p, a).map_err(Error::TargetNotMorphism)?;
        count += 1u32;
    }
    Ok(count)
}

/// Pointed homotopy classes of maps, as connected components of the
/// homotopy groupoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomotopyClasses {
    /// Lexicographically least morphism of each class, in increasing order.
    pub representatives: Vec<Morphism>,
    /// Size of each class, aligned with `representatives`.
    pub sizes: Vec<usize>,
    /// Class index of every morphism in enumeration order.
    pub class_of: Vec<usize>,
}

impl HomotopyClasses {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

/// Connected components of the graph with an edge `f -> target(f, K)` for
/// every morphism `f` and every homotopy `K` out of it.
pub fn homotopy_classes(p: &CWPresentation, a: &FiniteCrossedComplex) -> Result<HomotopyClasses> {
    homotopy_classes_with(p, a, &SearchConfig::default(), DEFAULT_EDGE_BUDGET)
}

pub fn homotopy_classes_with(
    p: &CWPresentation,
    a: &FiniteCrossedComplex,
    cfg: &SearchConfig,
    edge_budget: u64,
) -> Result<HomotopyClasses> {
    let homs = enumerate_homs_with(p, a, cfg)?;
    let per = count_homotopies_from(p, a, 1);
    let edges = per * BigUint::from(homs.len());
    if edges > BigUint::from(edge_budget) {
        return Err(Error::ResultTooLarge { size: edges.to_string(), cap: edge_budget });
    }
    let targets: Vec<Result<Vec<usize>>> = cfg.install(|| {
        homs.par_iter()
            .map(|f| {
                HomotopiesFrom::new(p, a)
                    .map(|data| {
                        let g = target_unchecked(a, p, f, &data)?;
                        homs.binary_search(&g).map_err(|_| {
                            Error::TargetNotMorphism(match g.verify(p, a) {
                                Err(why) => why,
                                Ok(()) => format!("{g} is missing from the enumeration"),
                            })
                        })
                    })
                    .collect()
            })
            .collect()
    });
    let mut uf = UnionFind::new(homs.len());
    for (i, ts) in targets.into_iter().enumerate() {
        for j in ts? {
            uf.union(i, j);
        }
    }
    let mut root_class = vec![usize::MAX; homs.len()];
    let mut representatives = Vec::new();
    let mut sizes = Vec::new();
    let mut class_of = Vec::with_capacity(homs.len());
    for (i, f) in homs.iter().enumerate() {
        let root = uf.find(i);
        if root_class[root] == usize::MAX {
            root_class[root] = representatives.len();
            representatives.push(f.clone());
            sizes.push(0);
        }
        let class = root_class[root];
        sizes[class] += 1;
        class_of.push(class);
    }
    Ok(HomotopyClasses { representatives, sizes, class_of })
}
