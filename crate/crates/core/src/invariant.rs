//! The rational invariant `I_𝒜(M)` and its mapping-space cross-check.
//!
//! `I_𝒜(M) = #Hom(Π(M), 𝒜) · Π_{n>=1} ( Π_{m>=1} |A_{m+n}|^{l_m} )^{(-1)^n}`.
//! Since `|A_k| = 1` above the truncation `L`, only `m + n <= L` contributes.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::crossed::FiniteCrossedComplex;
use crate::enumerate::{count_homs_with, enumerate_homs_with, SearchConfig};
use crate::error::{Error, Result};
use crate::homotopy::{count_homotopies_from, enumerate_homotopies_from};
use crate::presentation::CWPresentation;

/// An exact rational in lowest terms with a positive denominator.
///
/// Displays as `p/q`, or `p` when `q = 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(ExactRational(BigRational::new(numer, denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        ExactRational(BigRational::from_integer(n.into()))
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn recip(&self) -> Self {
        ExactRational(self.0.recip())
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::InvalidArgument(format!("not a rational: {s:?}")))
        };
        match s.split_once('/') {
            Some((p, q)) => {
                let q = parse(q)?;
                if !q.is_positive() {
                    return Err(Error::InvalidArgument(format!("denominator must be positive: {s:?}")));
                }
                ExactRational::new(parse(p)?, q)
            }
            None => Ok(ExactRational::from_integer(parse(s)?)),
        }
    }
}

impl std::ops::Mul for ExactRational {
    type Output = ExactRational;

    fn mul(self, rhs: Self) -> Self {
        ExactRational(self.0 * rhs.0)
    }
}

impl std::ops::Add for ExactRational {
    type Output = ExactRational;

    fn add(self, rhs: Self) -> Self {
        ExactRational(self.0 + rhs.0)
    }
}

impl From<BigUint> for ExactRational {
    fn from(n: BigUint) -> Self {
        ExactRational::from_integer(BigInt::from(n))
    }
}

/// `Π_{n>=1} ( Π_{m>=1} |A_{m+n}|^{l_m} )^{(-1)^n}`, truncated at `m + n <= L`.
pub fn normalization_factor(p: &CWPresentation, a: &FiniteCrossedComplex) -> ExactRational {
    let len = a.len();
    let mut numer = BigUint::one();
    let mut denom = BigUint::one();
    for n in 1..len {
        let mut inner = BigUint::one();
        for m in 1..=len - n {
            let size = a.size_at(m + n).expect("m + n >= 2");
            inner *= BigUint::from(size).pow(p.cell_count(m) as u32);
        }
        if n % 2 == 1 {
            denom *= inner;
        } else {
            numer *= inner;
        }
    }
    ExactRational::new(numer.into(), denom.into()).expect("denominator is a product of group orders")
}

/// `I_𝒜(M)`: the morphism count times the normalisation factor.
pub fn invariant_ia(p: &CWPresentation, a: &FiniteCrossedComplex) -> Result<ExactRational> {
    invariant_ia_with(p, a, &SearchConfig::default())
}

pub fn invariant_ia_with(p: &CWPresentation, a: &FiniteCrossedComplex, cfg: &SearchConfig) -> Result<ExactRational> {
    let count = count_homs_with(p, a, cfg)?;
    Ok(ExactRational::from(count) * normalization_factor(p, a))
}

/// Multiplicative Euler characteristic of the pointed mapping space,
/// `Σ_f Π_{k>=1} #CRS_k^f ^ {(-1)^k}`, summed over the enumerated morphisms.
///
/// With `verify_first_factor`, the `k = 1` factor of every `f` is also
/// obtained by listing every homotopy out of `f` (checking each target is a
/// morphism) and must agree with the closed-form count.
pub fn euler_char_mapping_space(
    p: &CWPresentation,
    a: &FiniteCrossedComplex,
    cfg: &SearchConfig,
    verify_first_factor: bool,
) -> Result<ExactRational> {
    let homs = enumerate_homs_with(p, a, cfg)?;
    let mut numer = BigUint::one();
    let mut denom = BigUint::one();
    for k in 1..a.len() {
        let c = count_homotopies_from(p, a, k);
        if k % 2 == 1 {
            denom *= c;
        } else {
            numer *= c;
        }
    }
    let weight = ExactRational::new(numer.into(), denom.into())?;
    let first = count_homotopies_from(p, a, 1);
    let mut total = ExactRational::zero();
    for f in &homs {
        if verify_first_factor {
            let listed = enumerate_homotopies_from(a, p, f)?;
            if listed != first {
                return Err(Error::CrossCheckFailed(format!(
                    "{listed} homotopies listed out of {f}, closed form gives {first}"
                )));
            }
        }
        total = total + weight.clone();
    }
    Ok(total)
}
