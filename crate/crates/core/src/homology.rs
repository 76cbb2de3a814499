//! Integer homology of the boundary torus: Seifert invariants, section
//! changes, meridian classes, the induced boundary map, and the arithmetic
//! deciding when a fiber-preserving branched covering of fibered solid tori
//! exists.
//!
//! Notation: a fibered solid torus carries an invariant (α, β) with α ≥ 1 and
//! gcd(α, β) = 1, meaning its meridian is homologous to αq + βh in a chosen
//! (cross section, fiber) basis (q, h) of the boundary torus. A degree-k
//! fiber-preserving branched covering (α₁, β₁) → (α₂, β₂) exists exactly when
//! some choice of cross section makes β₁/α₁ = k·β₂/α₂, which is tested here
//! as the integer identity β₁·α₂ = k·β₂·α₁.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{bezout, BezoutPair};

/// The Seifert invariant (α, β) of a fibered solid torus: α ≥ 1,
/// gcd(α, β) = 1, meridian homologous to αq + βh.
///
/// β is basis-relative and deliberately NOT normalized mod α; moving to
/// another cross section is the explicit [`SeifertInvariant::change_section`].
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawInvariant")]
pub struct SeifertInvariant {
    #[serde(with = "crate::jsonnum")]
    alpha: BigInt,
    #[serde(with = "crate::jsonnum")]
    beta: BigInt,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInvariant {
    #[serde(with = "crate::jsonnum")]
    alpha: BigInt,
    #[serde(with = "crate::jsonnum")]
    beta: BigInt,
}

impl TryFrom<RawInvariant> for SeifertInvariant {
    type Error = Error;
    fn try_from(raw: RawInvariant) -> Result<Self> {
        SeifertInvariant::new(raw.alpha, raw.beta)
    }
}

impl SeifertInvariant {
    pub fn new(alpha: impl Into<BigInt>, beta: impl Into<BigInt>) -> Result<Self> {
        let (alpha, beta) = (alpha.into(), beta.into());
        if !alpha.is_positive() {
            return Err(Error::InvalidInvariant {
                alpha,
                beta,
                reason: "alpha must be at least 1",
            });
        }
        if !alpha.gcd(&beta).is_one() {
            return Err(Error::InvalidInvariant {
                alpha,
                beta,
                reason: "alpha and beta must be coprime",
            });
        }
        Ok(SeifertInvariant { alpha, beta })
    }

    pub fn alpha(&self) -> &BigInt {
        &self.alpha
    }

    pub fn beta(&self) -> &BigInt {
        &self.beta
    }

    /// The meridian αq + βh as a class in the boundary torus.
    pub fn meridian_class(&self) -> TorusClass {
        TorusClass::new(self.alpha.clone(), self.beta.clone())
    }

    /// The invariant relative to the cross section q + nh: (α, β − nα).
    ///
    /// Forced by rewriting αq + βh = α(q + nh) + (β − nα)h; preserves
    /// gcd(α, β), so the result is always valid.
    pub fn change_section(&self, n: &BigInt) -> SeifertInvariant {
        SeifertInvariant {
            alpha: self.alpha.clone(),
            beta: &self.beta - n * &self.alpha,
        }
    }

    /// The canonical Bézout pair for (α, β).
    pub fn bezout_pair(&self) -> BezoutPair {
        bezout(&self.alpha, &self.beta)
    }
}

impl fmt::Display for SeifertInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

impl fmt::Debug for SeifertInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A class a·q + b·h in the first homology of the boundary torus, in a
/// (cross section, fiber) basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusClass {
    #[serde(with = "crate::jsonnum")]
    q: BigInt,
    #[serde(with = "crate::jsonnum")]
    h: BigInt,
}

impl TorusClass {
    pub fn new(q: impl Into<BigInt>, h: impl Into<BigInt>) -> Self {
        TorusClass {
            q: q.into(),
            h: h.into(),
        }
    }

    pub fn q_coeff(&self) -> &BigInt {
        &self.q
    }

    pub fn h_coeff(&self) -> &BigInt {
        &self.h
    }

    pub fn scaled(&self, s: &BigInt) -> TorusClass {
        TorusClass {
            q: s * &self.q,
            h: s * &self.h,
        }
    }
}

/// A 2×2 integer matrix acting on (q, h) coordinates of the boundary torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMapMatrix {
    entries: [[BigInt; 2]; 2],
}

impl BoundaryMapMatrix {
    pub fn new(
        qq: impl Into<BigInt>,
        qh: impl Into<BigInt>,
        hq: impl Into<BigInt>,
        hh: impl Into<BigInt>,
    ) -> Self {
        BoundaryMapMatrix {
            entries: [[qq.into(), qh.into()], [hq.into(), hh.into()]],
        }
    }

    /// diag(k, 1): the homology action q₁ ↦ kq₂, h₁ ↦ h₂ induced on the
    /// boundary by a degree-k fiber-preserving covering.
    pub fn for_degree(k: &BigInt) -> Self {
        BoundaryMapMatrix::new(k.clone(), 0, 0, 1)
    }

    pub fn apply(&self, c: &TorusClass) -> TorusClass {
        let e = &self.entries;
        TorusClass {
            q: &e[0][0] * &c.q + &e[0][1] * &c.h,
            h: &e[1][0] * &c.q + &e[1][1] * &c.h,
        }
    }

    pub fn determinant(&self) -> BigInt {
        let e = &self.entries;
        &e[0][0] * &e[1][1] - &e[0][1] * &e[1][0]
    }
}

/// The covering degree of a torus map read off from its homology action.
pub fn boundary_degree(m: &BoundaryMapMatrix) -> BigInt {
    m.determinant()
}

/// The boundary action of a degree-k fiber-preserving covering:
/// (a, b) ↦ (k·a, b).
pub fn boundary_pushforward(c: &TorusClass, k: &BigInt) -> TorusClass {
    TorusClass {
        q: k * &c.q,
        h: c.h.clone(),
    }
}

/// The nonzero integer s with f|₊(m₁) = s·m₂, certifying that a degree-k
/// covering is arithmetically possible: α₁·k = s·α₂ and β₁ = s·β₂.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecessityWitness {
    s: BigInt,
}

impl NecessityWitness {
    pub fn scale(&self) -> &BigInt {
        &self.s
    }
}

/// Whether β₁/α₁ = k·β₂/α₂, tested as β₁·α₂ = k·β₂·α₁ so that β₂ = 0 needs
/// no special case.
pub fn ratio_condition(inv1: &SeifertInvariant, inv2: &SeifertInvariant, k: &BigInt) -> bool {
    assert!(k.is_positive(), "degree k must be at least 1");
    inv1.beta() * inv2.alpha() == k * inv2.beta() * inv1.alpha()
}

/// Finds the integer s ≠ 0 with α₁·k = s·α₂ and β₁ = s·β₂, if any.
///
/// A witness exists exactly when [`ratio_condition`] holds; absence is a
/// value, not an error.
pub fn necessity_scale(
    inv1: &SeifertInvariant,
    inv2: &SeifertInvariant,
    k: &BigInt,
) -> Option<NecessityWitness> {
    assert!(k.is_positive(), "degree k must be at least 1");
    let s = if inv2.beta().is_zero() {
        // gcd(α₂, 0) = 1 forces α₂ = 1, so α₁·k = s·α₂ pins s; β₁ = s·0
        // additionally demands β₁ = 0.
        if !inv1.beta().is_zero() {
            return None;
        }
        inv1.alpha() * k
    } else {
        let (s, rem) = inv1.beta().div_rem(inv2.beta());
        if !rem.is_zero() || s.is_zero() {
            return None;
        }
        s
    };
    (inv1.alpha() * k == &s * inv2.alpha()).then_some(NecessityWitness { s })
}

/// Solves the ratio identity for the source β: returns β₁ = k·β₂·α₁/α₂ when
/// that quotient is an integer and gcd(α₁, β₁) = 1.
pub fn solve_source_beta(alpha1: &BigInt, inv2: &SeifertInvariant, k: &BigInt) -> Option<BigInt> {
    assert!(alpha1.is_positive(), "alpha1 must be at least 1");
    assert!(k.is_positive(), "degree k must be at least 1");
    let (beta1, rem) = (k * inv2.beta() * alpha1).div_rem(inv2.alpha());
    (rem.is_zero() && alpha1.gcd(&beta1).is_one()).then_some(beta1)
}

/// The positive divisors of n ≥ 1, ascending.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    assert!(n.is_positive(), "divisors requires n >= 1");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            small.push(d.clone());
            let q = n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// All source invariants admitting a degree-k covering onto inv2, ascending
/// in α₁.
///
/// When β₂ ≠ 0 the divisibilities α₁ | α₂ and β₂ | β₁ make the search space
/// the divisors of α₂, with β₁ pinned by the ratio; when β₂ = 0 the only
/// source is (1, 0).
pub fn enumerate_sources(inv2: &SeifertInvariant, k: &BigInt) -> Vec<SeifertInvariant> {
    assert!(k.is_positive(), "degree k must be at least 1");
    if inv2.beta().is_zero() {
        return vec![SeifertInvariant::new(1, 0).expect("(1, 0) is valid")];
    }
    divisors(inv2.alpha())
        .into_iter()
        .filter_map(|alpha1| {
            let beta1 = solve_source_beta(&alpha1, inv2, k)?;
            Some(SeifertInvariant::new(alpha1, beta1).expect("coprimality checked by the solver"))
        })
        .collect()
}

/// Outcome of [`decide_cover`]: whether a degree-k covering exists, and if
/// so through which cross-section change of the source.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionRecord {
    pub exists: bool,
    #[serde(with = "crate::jsonnum::opt")]
    pub section_shift: Option<BigInt>,
    pub adjusted_invariant: Option<SeifertInvariant>,
    #[serde(with = "crate::jsonnum::opt")]
    pub scale_s: Option<BigInt>,
}

impl DecisionRecord {
    fn negative() -> Self {
        DecisionRecord {
            exists: false,
            section_shift: None,
            adjusted_invariant: None,
            scale_s: None,
        }
    }

    fn positive(shift: BigInt, adjusted: SeifertInvariant, inv2: &SeifertInvariant, k: &BigInt) -> Self {
        let witness = necessity_scale(&adjusted, inv2, k)
            .expect("ratio condition holds, so a witness exists");
        DecisionRecord {
            exists: true,
            section_shift: Some(shift),
            adjusted_invariant: Some(adjusted),
            scale_s: Some(witness.scale().clone()),
        }
    }
}

/// Decides whether a degree-k fiber-preserving branched covering
/// inv1 → inv2 exists.
///
/// With `search_sections` false the invariants are compared as given. With
/// it true the source invariant may first be rewritten relative to another
/// cross section; the target β₁ is pinned to k·β₂·α₁/α₂, so at most one
/// shift n can work and it is computed directly rather than searched.
pub fn decide_cover(
    inv1: &SeifertInvariant,
    inv2: &SeifertInvariant,
    k: &BigInt,
    search_sections: bool,
) -> DecisionRecord {
    assert!(k.is_positive(), "degree k must be at least 1");
    if !search_sections {
        if ratio_condition(inv1, inv2, k) {
            return DecisionRecord::positive(BigInt::zero(), inv1.clone(), inv2, k);
        }
        return DecisionRecord::negative();
    }
    let (beta1_target, rem) = (k * inv2.beta() * inv1.alpha()).div_rem(inv2.alpha());
    if !rem.is_zero() {
        return DecisionRecord::negative();
    }
    let (n, rem) = (inv1.beta() - &beta1_target).div_rem(inv1.alpha());
    if !rem.is_zero() {
        return DecisionRecord::negative();
    }
    let adjusted = inv1.change_section(&n);
    debug_assert!(ratio_condition(&adjusted, inv2, k));
    DecisionRecord::positive(n, adjusted, inv2, k)
}
