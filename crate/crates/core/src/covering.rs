//! The explicit covering construction on the universal cover D²×ℝ.
//!
//! Both solid tori are quotients of D²×ℝ by a screw motion τ (rotate the disk
//! by −α′/α, translate the line by 1, where (α′, β′) is the Bézout pair of
//! the invariant). The covering is induced by the linear map
//! f̃(re^{2πiθ}, t) = (re^{2πi·θ_mult·θ}, t_mult·t), which commutes with the
//! two screw motions up to the divisibility lemma checked here, and so
//! descends to the quotients. Everything is computed in exact rational
//! arithmetic: equality of points is decidable, no tolerances exist.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{reduce_mod1, AngleMod1, BezoutPair, Rational};
use crate::homology::{ratio_condition, SeifertInvariant};

/// A point (re^{2πiθ}, t) of the universal cover D²×ℝ, with rational
/// coordinates so that all identities are checked exactly.
///
/// 0 ≤ r ≤ 1 always; the disk center has no angle, so points with r = 0
/// store θ = 0 and equality there ignores the angle by construction.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPoint")]
pub struct UCPoint {
    r: Rational,
    theta: AngleMod1,
    t: Rational,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPoint {
    r: Rational,
    theta: Rational,
    t: Rational,
}

impl TryFrom<RawPoint> for UCPoint {
    type Error = Error;
    fn try_from(raw: RawPoint) -> Result<Self> {
        UCPoint::new(raw.r, raw.theta, raw.t)
    }
}

impl UCPoint {
    /// Builds a point, reducing θ mod 1 and normalizing θ to 0 when r = 0.
    pub fn new(r: Rational, theta: Rational, t: Rational) -> Result<Self> {
        if r.is_negative() || r > Rational::one() {
            return Err(Error::InvalidPoint(format!("r = {r} is outside [0, 1]")));
        }
        let theta = if r.is_zero() {
            AngleMod1::zero()
        } else {
            reduce_mod1(&theta)
        };
        Ok(UCPoint { r, theta, t })
    }

    pub fn r(&self) -> &Rational {
        &self.r
    }

    pub fn theta(&self) -> &AngleMod1 {
        &self.theta
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }
}

impl std::fmt::Debug for UCPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.r, self.theta, self.t)
    }
}

/// The screw motion τ generating the deck group of one solid torus:
/// (re^{2πiθ}, t) ↦ (re^{2πi(θ−α′/α)}, t+1), with α′ taken mod α.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeckAction {
    #[serde(with = "crate::jsonnum")]
    alpha: BigInt,
    #[serde(with = "crate::jsonnum")]
    alpha_prime: BigInt,
}

impl DeckAction {
    pub fn for_invariant(inv: &SeifertInvariant) -> DeckAction {
        DeckAction::from_parts(inv.alpha(), inv.bezout_pair().alpha_prime())
    }

    fn from_parts(alpha: &BigInt, alpha_prime: &BigInt) -> DeckAction {
        // τ only sees α′/α mod 1, so any Bézout choice normalizes to the
        // same action.
        DeckAction {
            alpha: alpha.clone(),
            alpha_prime: alpha_prime.mod_floor(alpha),
        }
    }

    pub fn alpha(&self) -> &BigInt {
        &self.alpha
    }

    pub fn alpha_prime(&self) -> &BigInt {
        &self.alpha_prime
    }

    /// τⁿ applied to p: (r, θ − n·α′/α mod 1, t + n). n may be negative.
    pub fn apply(&self, p: &UCPoint, n: &BigInt) -> UCPoint {
        let t = &p.t + &Rational::from_integer(n.clone());
        if p.r.is_zero() {
            return UCPoint {
                r: p.r.clone(),
                theta: AngleMod1::zero(),
                t,
            };
        }
        let shift = Rational::new(-(n * &self.alpha_prime), self.alpha.clone())
            .expect("alpha is positive");
        UCPoint {
            r: p.r.clone(),
            theta: p.theta.shifted(&shift),
            t,
        }
    }

    /// The orbit representative with t ∈ [0, 1): τⁿ(p) for n = −⌊t⌋.
    pub fn canonical_rep(&self, p: &UCPoint) -> QuotientPoint {
        let n = -p.t.floor_int();
        QuotientPoint {
            rep: self.apply(p, &n),
            owner: self.clone(),
        }
    }

    /// Whether a and b lie on the same deck orbit, decided by comparing
    /// canonical representatives.
    pub fn quotient_eq(&self, a: &UCPoint, b: &UCPoint) -> bool {
        self.canonical_rep(a).rep == self.canonical_rep(b).rep
    }

    /// Deck steps after which a generic fiber closes up: the least n ≥ 1
    /// with n·α′ ≡ 0 (mod α), i.e. α/gcd(α, α′). Valid invariants give α.
    pub fn fiber_period(&self) -> BigInt {
        &self.alpha / self.alpha.gcd(&self.alpha_prime)
    }
}

/// A point of the quotient solid torus: the canonical representative with
/// t ∈ [0, 1) together with the deck action it is reduced by.
#[derive(Clone, PartialEq, Eq)]
pub struct QuotientPoint {
    rep: UCPoint,
    owner: DeckAction,
}

impl QuotientPoint {
    pub fn rep(&self) -> &UCPoint {
        &self.rep
    }

    pub fn owner(&self) -> &DeckAction {
        &self.owner
    }
}

impl std::fmt::Debug for QuotientPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{:?} mod ({}, {})]", self.rep, self.owner.alpha, self.owner.alpha_prime)
    }
}

/// Branch locus description of a covering: the local disk-direction order at
/// the central fiber and how many central fibers sit above the target's.
///
/// Their product is the covering degree k; branch_order = 1 means the map is
/// an honest (unbranched) covering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchingData {
    #[serde(with = "crate::jsonnum")]
    pub branch_order: BigInt,
    #[serde(with = "crate::jsonnum")]
    pub central_preimage_count: BigInt,
}

/// A fully determined degree-k fiber-preserving branched covering between
/// the solid tori with invariants inv1 and inv2.
///
/// theta_mult scales the disk angle (β₁/β₂, or k when β₂ = 0) and t_mult
/// scales the line coordinate (α₂/α₁); theta_mult·t_mult = k. Every
/// constructor except [`CoverSpec::new_unchecked`] validates all invariants,
/// and deserialization re-validates, so serialized specs are never trusted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawCoverSpec")]
pub struct CoverSpec {
    #[serde(with = "crate::jsonnum")]
    k: BigInt,
    inv1: SeifertInvariant,
    inv2: SeifertInvariant,
    bez1: BezoutPair,
    bez2: BezoutPair,
    #[serde(with = "crate::jsonnum")]
    theta_mult: BigInt,
    #[serde(with = "crate::jsonnum")]
    t_mult: BigInt,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCoverSpec {
    #[serde(with = "crate::jsonnum")]
    k: BigInt,
    inv1: SeifertInvariant,
    inv2: SeifertInvariant,
    bez1: BezoutPair,
    bez2: BezoutPair,
    #[serde(with = "crate::jsonnum")]
    theta_mult: BigInt,
    #[serde(with = "crate::jsonnum")]
    t_mult: BigInt,
}

impl TryFrom<RawCoverSpec> for CoverSpec {
    type Error = Error;
    fn try_from(raw: RawCoverSpec) -> Result<Self> {
        let spec = CoverSpec {
            k: raw.k,
            inv1: raw.inv1,
            inv2: raw.inv2,
            bez1: raw.bez1,
            bez2: raw.bez2,
            theta_mult: raw.theta_mult,
            t_mult: raw.t_mult,
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl CoverSpec {
    /// Constructs the degree-k covering inv1 → inv2, rejecting invariant
    /// pairs for which none exists.
    ///
    /// When β₂ = 0 (forcing both invariants to be (1, 0)) the model map is
    /// the degree-k disk cover θ ↦ kθ crossed with the identity.
    pub fn build(inv1: &SeifertInvariant, inv2: &SeifertInvariant, k: &BigInt) -> Result<CoverSpec> {
        if !k.is_positive() {
            return Err(Error::InvalidDegree(k.clone()));
        }
        if !ratio_condition(inv1, inv2, k) {
            return Err(Error::RatioCondition {
                k: k.clone(),
                lhs: inv1.beta() * inv2.alpha(),
                rhs: k * inv2.beta() * inv1.alpha(),
            });
        }
        let (theta_mult, t_mult) = if inv2.beta().is_zero() {
            (k.clone(), BigInt::one())
        } else {
            let (tm, rem) = inv1.beta().div_rem(inv2.beta());
            if !rem.is_zero() {
                return Err(Error::Internal(
                    "beta1/beta2 is not an integer despite the ratio identity".into(),
                ));
            }
            let (tt, rem) = inv2.alpha().div_rem(inv1.alpha());
            if !rem.is_zero() {
                return Err(Error::Internal(
                    "alpha2/alpha1 is not an integer despite the ratio identity".into(),
                ));
            }
            (tm, tt)
        };
        let spec = CoverSpec {
            k: k.clone(),
            inv1: inv1.clone(),
            inv2: inv2.clone(),
            bez1: inv1.bezout_pair(),
            bez2: inv2.bezout_pair(),
            theta_mult,
            t_mult,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Assembles a spec from raw parts without checking anything.
    ///
    /// This exists solely to exercise failure-reporting paths (verification
    /// of deliberately corrupted specs); every other way of obtaining a
    /// `CoverSpec`, including deserialization, validates.
    pub fn new_unchecked(
        k: BigInt,
        inv1: SeifertInvariant,
        inv2: SeifertInvariant,
        bez1: BezoutPair,
        bez2: BezoutPair,
        theta_mult: BigInt,
        t_mult: BigInt,
    ) -> CoverSpec {
        CoverSpec {
            k,
            inv1,
            inv2,
            bez1,
            bez2,
            theta_mult,
            t_mult,
        }
    }

    /// Checks every structural invariant, naming the first one violated.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: &str| Err(Error::SpecInvariant(msg.into()));
        if !self.k.is_positive() {
            return fail("degree k must be at least 1");
        }
        if !self.t_mult.is_positive() {
            return fail("t_mult must be positive");
        }
        if !ratio_condition(&self.inv1, &self.inv2, &self.k) {
            return fail("ratio identity beta1*alpha2 = k*beta2*alpha1 fails");
        }
        if &self.theta_mult * &self.t_mult != self.k {
            return fail("theta_mult * t_mult must equal k");
        }
        if !self.bez1.satisfies(self.inv1.alpha(), self.inv1.beta()) {
            return fail("bez1 violates alpha*beta' - alpha'*beta = 1 for inv1");
        }
        if !self.bez2.satisfies(self.inv2.alpha(), self.inv2.beta()) {
            return fail("bez2 violates alpha*beta' - alpha'*beta = 1 for inv2");
        }
        if self.inv2.beta().is_zero() {
            if !self.t_mult.is_one() {
                return fail("the beta2 = 0 model map requires t_mult = 1");
            }
        } else {
            if &self.theta_mult * self.inv2.beta() != *self.inv1.beta() {
                return fail("theta_mult must equal beta1/beta2");
            }
            if !self.theta_mult.is_positive() {
                return fail("theta_mult must be positive");
            }
            if &self.t_mult * self.inv1.alpha() != *self.inv2.alpha() {
                return fail("t_mult must equal alpha2/alpha1");
            }
        }
        let gap = self.bez2.alpha_prime() - &self.theta_mult * self.bez1.alpha_prime();
        if !gap.is_multiple_of(self.inv1.alpha()) {
            return fail("alpha2' - theta_mult*alpha1' must be a multiple of alpha1");
        }
        Ok(())
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    pub fn inv1(&self) -> &SeifertInvariant {
        &self.inv1
    }

    pub fn inv2(&self) -> &SeifertInvariant {
        &self.inv2
    }

    pub fn bez1(&self) -> &BezoutPair {
        &self.bez1
    }

    pub fn bez2(&self) -> &BezoutPair {
        &self.bez2
    }

    pub fn theta_mult(&self) -> &BigInt {
        &self.theta_mult
    }

    pub fn t_mult(&self) -> &BigInt {
        &self.t_mult
    }

    /// The deck action of the source solid torus.
    pub fn deck1(&self) -> DeckAction {
        DeckAction::from_parts(self.inv1.alpha(), self.bez1.alpha_prime())
    }

    /// The deck action of the target solid torus.
    pub fn deck2(&self) -> DeckAction {
        DeckAction::from_parts(self.inv2.alpha(), self.bez2.alpha_prime())
    }

    /// The same covering with both Bézout pairs moved to an alternative
    /// choice (α′ + mα, β′ + mβ); all invariants survive the move.
    pub fn with_bezout_shift(&self, m1: &BigInt, m2: &BigInt) -> Result<CoverSpec> {
        let spec = CoverSpec {
            k: self.k.clone(),
            inv1: self.inv1.clone(),
            inv2: self.inv2.clone(),
            bez1: self.bez1.shifted(m1, self.inv1.alpha(), self.inv1.beta()),
            bez2: self.bez2.shifted(m2, self.inv2.alpha(), self.inv2.beta()),
            theta_mult: self.theta_mult.clone(),
            t_mult: self.t_mult.clone(),
        };
        spec.validate()?;
        Ok(spec)
    }

    /// The integer (α₂′ − theta_mult·α₁′)/α₁: the angle discrepancy between
    /// the two sides of the equivariance identity, in units of full turns
    /// per α₁ deck steps. Exactness is the divisibility lemma.
    pub fn divisibility_check(&self) -> Result<BigInt> {
        let gap = self.bez2.alpha_prime() - &self.theta_mult * self.bez1.alpha_prime();
        let (q, rem) = gap.div_rem(self.inv1.alpha());
        if !rem.is_zero() {
            return Err(Error::Internal(
                "alpha2' - theta_mult*alpha1' is not a multiple of alpha1".into(),
            ));
        }
        Ok(q)
    }

    /// The lifted map f̃(re^{2πiθ}, t) = (re^{2πi·theta_mult·θ}, t_mult·t) on
    /// the universal cover. Preserves r.
    pub fn lifted_apply(&self, p: &UCPoint) -> UCPoint {
        UCPoint {
            r: p.r.clone(),
            theta: p.theta.scaled(&self.theta_mult),
            t: &p.t * &self.t_mult,
        }
    }

    /// The covering map itself: apply f̃ to the representative and reduce in
    /// the target torus. Well-defined on quotient points by equivariance.
    pub fn quotient_map_apply(&self, x: &QuotientPoint) -> QuotientPoint {
        assert_eq!(
            x.owner,
            self.deck1(),
            "the point must live in the source solid torus"
        );
        self.deck2().canonical_rep(&self.lifted_apply(&x.rep))
    }

    /// All preimages of y under the covering map, as canonical quotient
    /// points of the source torus.
    ///
    /// Off the central fiber (r > 0) there are exactly k = theta_mult·t_mult:
    /// the t-coordinate lifts through the t_mult consecutive deck windows and
    /// the angle congruence theta_mult·θ ≡ θ_target has theta_mult solutions
    /// in each. On the central fiber (r = 0) the angle drops out, leaving
    /// t_mult preimages. Ordered by deck window, then by angle solution.
    pub fn preimages(&self, y: &QuotientPoint) -> Vec<QuotientPoint> {
        let d1 = self.deck1();
        let d2 = self.deck2();
        assert_eq!(
            y.owner, d2,
            "the target point must live in the target solid torus"
        );
        let t_mult_rat = Rational::from_integer(self.t_mult.clone());
        let mut out = Vec::new();
        let mut n = BigInt::zero();
        while n < self.t_mult {
            // y.t ∈ [0,1), so t1 ∈ [n/t_mult, (n+1)/t_mult) ⊆ [0,1): the
            // representative is already canonical.
            let t1 = &(&y.rep.t + &Rational::from_integer(n.clone())) / &t_mult_rat;
            if y.rep.r.is_zero() {
                out.push(QuotientPoint {
                    rep: UCPoint {
                        r: Rational::zero(),
                        theta: AngleMod1::zero(),
                        t: t1,
                    },
                    owner: d1.clone(),
                });
                n += 1;
                continue;
            }
            let deck_shift = Rational::new(-(&n * d2.alpha_prime()), d2.alpha().clone())
                .expect("alpha is positive");
            let theta_target = y.rep.theta.shifted(&deck_shift);
            let theta_mult_rat = Rational::from_integer(self.theta_mult.clone());
            let mut j = BigInt::zero();
            while j < self.theta_mult {
                let theta1 = AngleMod1::new(
                    &(&(theta_target.value() + &Rational::from_integer(j.clone()))
                        / &theta_mult_rat),
                );
                out.push(QuotientPoint {
                    rep: UCPoint {
                        r: y.rep.r.clone(),
                        theta: theta1,
                        t: t1.clone(),
                    },
                    owner: d1.clone(),
                });
                j += 1;
            }
            n += 1;
        }
        out
    }

    /// The covering degree of the map restricted to the fiber through x onto
    /// its image fiber. Must be 1 for every point off the central fiber.
    ///
    /// The source fiber closes after `fiber_period` deck steps, its image
    /// spans t_mult times that, and the target fiber closes after its own
    /// period; the winding count is the exact quotient.
    pub fn fiber_degree(&self, x: &QuotientPoint) -> Result<BigInt> {
        assert_eq!(
            x.owner,
            self.deck1(),
            "the point must live in the source solid torus"
        );
        if x.rep.r.is_zero() {
            return Err(Error::CentralFiberDegree);
        }
        let image_extent = &self.t_mult * self.deck1().fiber_period();
        let (winding, rem) = image_extent.div_rem(&self.deck2().fiber_period());
        if !rem.is_zero() {
            return Err(Error::Internal(
                "fiber image does not close over a whole number of target fibers".into(),
            ));
        }
        Ok(winding)
    }

    /// Branch locus description: local order theta_mult at the central
    /// fiber, t_mult central fibers upstairs.
    pub fn branching_data(&self) -> BranchingData {
        BranchingData {
            branch_order: self.theta_mult.clone(),
            central_preimage_count: self.t_mult.clone(),
        }
    }
}
