//! Numerical Chern data `(r; c1 = aH + bE; c2 = kH² + lE²; c3 = m[pt])` of
//! coherent sheaves on the blow-up.

use core::ops::{Add, Neg, Sub};

use crate::chow::{frac, rat, to_integer, ChowClass, ChowRing, Rational};
use crate::error::{Error, Result};

/// The line bundle `O(p,q) = O(pH + qE)`, used as a twist.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Twist {
    pub p: i64,
    pub q: i64,
}

impl Twist {
    pub const ZERO: Twist = Twist { p: 0, q: 0 };

    pub const fn new(p: i64, q: i64) -> Self {
        Twist { p, q }
    }

    pub fn character(&self, ring: &ChowRing) -> ChowClass {
        ring.line_bundle_character(self.p, self.q)
    }
}

impl Add for Twist {
    type Output = Twist;

    fn add(self, rhs: Twist) -> Twist {
        Twist::new(self.p + rhs.p, self.q + rhs.q)
    }
}

impl Sub for Twist {
    type Output = Twist;

    fn sub(self, rhs: Twist) -> Twist {
        Twist::new(self.p - rhs.p, self.q - rhs.q)
    }
}

impl Neg for Twist {
    type Output = Twist;

    fn neg(self) -> Twist {
        Twist::new(-self.p, -self.q)
    }
}

/// `χ(O(p,q)) = ((p+1)(p+2)(p+3) + q(q−1)(q−2)) / 6`.
pub fn chi_line_bundle(t: Twist) -> i64 {
    let Twist { p, q } = t;
    // both products are multiples of 6
    ((p + 1) * (p + 2) * (p + 3) + q * (q - 1) * (q - 2)) / 6
}

/// Numerical Chern data of a coherent sheaf.
///
/// Construct with [`ChernData::new`], which enforces non-negative rank and
/// the parity constraint `m ≡ k(a+4) − l(b−6) (mod 2)`, or with
/// [`ChernData::new_unchecked`] for exploratory inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ChernData {
    r: i64,
    a: i64,
    b: i64,
    k: i64,
    l: i64,
    m: i64,
}

impl ChernData {
    pub fn new(r: i64, a: i64, b: i64, k: i64, l: i64, m: i64) -> Result<Self> {
        if r < 0 {
            return Err(Error::NegativeRank(r));
        }
        let d = ChernData { r, a, b, k, l, m };
        if !d.is_parity_consistent() {
            return Err(Error::ParityViolation { k, l, a, b, m });
        }
        Ok(d)
    }

    /// Skips every check.
    pub fn new_unchecked(r: i64, a: i64, b: i64, k: i64, l: i64, m: i64) -> Self {
        ChernData { r, a, b, k, l, m }
    }

    pub fn structure_sheaf() -> Self {
        ChernData::line_bundle(Twist::ZERO)
    }

    pub fn line_bundle(t: Twist) -> Self {
        ChernData::new_unchecked(1, t.p, t.q, 0, 0, 0)
    }

    pub fn rank(&self) -> i64 {
        self.r
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn c1(&self) -> ChowClass {
        ChowClass::divisor(self.a, self.b)
    }

    pub fn c2(&self) -> ChowClass {
        ChowClass::curve(self.k, self.l)
    }

    pub fn c3(&self) -> ChowClass {
        ChowClass::from_ints(0, 0, 0, 0, 0, self.m)
    }

    /// `ch = r + c1 + (c1² − 2c2)/2 + (c1³ − 3c1c2 + 3c3)/6`.
    ///
    /// For `ε = +1` this is
    /// `r + (aH+bE) + ½((a²−2k)H² + (b²−2l)E²) + (1/6)(a³+b³−3ak−3bl+3m)[pt]`.
    pub fn character(&self, ring: &ChowRing) -> ChowClass {
        let c1 = self.c1();
        let c2 = self.c2();
        let c1sq = ring.mul(&c1, &c1);
        let c1cu = ring.mul(&c1sq, &c1);
        let c1c2 = ring.mul(&c1, &c2);
        ChowClass::scalar(rat(self.r))
            + c1
            + (c1sq - c2.scale(rat(2))).scale(frac(1, 2))
            + (c1cu - c1c2.scale(rat(3)) + self.c3().scale(rat(3))).scale(frac(1, 6))
    }

    /// Inverse of [`ChernData::character`]; fails unless every Chern class
    /// comes out integral.
    pub fn from_character(ring: &ChowRing, ch: &ChowClass) -> Result<Self> {
        let c1 = ch.part(1);
        let c1sq = ring.mul(&c1, &c1);
        let c2 = (c1sq - ch.part(2).scale(rat(2))).scale(frac(1, 2));
        let c1c2 = ring.mul(&c1, &c2);
        let c1cu = ring.mul(&c1sq, &c1);
        let c3 = (ch.part(3).scale(rat(6)) - c1cu + c1c2.scale(rat(3))).scale(frac(1, 3));
        let int = |x: Rational| to_integer(x).ok_or(Error::NonIntegralChern);
        Ok(ChernData {
            r: int(ch.deg0)?,
            a: int(c1.h)?,
            b: int(c1.e)?,
            k: int(c2.h2)?,
            l: int(c2.e2)?,
            m: int(c3.pt)?,
        })
    }

    /// `F(p,q)`, computed as `ch(F)·ch(O(p,q))` in the Chow ring.
    ///
    /// For rank 2 this is `a+2p, b+2q, k+ap+p², l+bq+q², m`.
    pub fn twisted(&self, ring: &ChowRing, t: Twist) -> Self {
        let ch = ring.mul(&self.character(ring), &t.character(ring));
        // Chern classes of a tensor product are integral polynomials in the
        // Chern classes of the factors.
        ChernData::from_character(ring, &ch).expect("twist of integral Chern data is integral")
    }

    /// Numerical dual of rank 2 data: `(2, −a, −b, k, l, m)`.
    pub fn dual_rank2(&self) -> Result<Self> {
        if self.r != 2 {
            return Err(Error::RankNotTwo(self.r));
        }
        Ok(ChernData {
            a: -self.a,
            b: -self.b,
            ..*self
        })
    }

    /// `m ≡ k(a+4) − l(b−6) (mod 2)`.
    pub fn is_parity_consistent(&self) -> bool {
        (self.m - self.k * (self.a + 4) + self.l * (self.b - 6)).rem_euclid(2) == 0
    }

    /// For a rank 2 reflexive sheaf: locally free iff `m = 0`.
    pub fn is_locally_free_reflexive_rank2(&self) -> Result<bool> {
        if self.r != 2 {
            return Err(Error::RankNotTwo(self.r));
        }
        Ok(self.m == 0)
    }

    /// `χ(F(p,q))` by the closed Riemann–Roch expansion
    ///
    /// `r·χ(O(p,q)) + χ(O(a,b)) − 1 + (1/6)[3m − 3k(a+4) − 3l(b−2)]
    ///  + ½[ap(p+a+4) + bq(q+b−2) − 2(kp+lq)]`.
    pub fn euler_characteristic(&self, t: Twist) -> Result<i64> {
        to_integer(self.euler_characteristic_exact(t)).ok_or(Error::NonIntegralEuler)
    }

    /// The same expansion before rounding; fractional exactly when parity fails.
    pub fn euler_characteristic_exact(&self, t: Twist) -> Rational {
        let ChernData { r, a, b, k, l, m } = *self;
        let Twist { p, q } = t;
        let base = rat(r * chi_line_bundle(t) + chi_line_bundle(Twist::new(a, b)) - 1);
        let chern = frac(3 * m - 3 * k * (a + 4) - 3 * l * (b - 2), 6);
        let twist = frac(
            a * p * (p + a + 4) + b * q * (q + b - 2) - 2 * (k * p + l * q),
            2,
        );
        base + chern + twist
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring() -> ChowRing {
        ChowRing::default()
    }

    fn cd(r: i64, a: i64, b: i64, k: i64, l: i64, m: i64) -> ChernData {
        ChernData::new_unchecked(r, a, b, k, l, m)
    }

    #[test]
    fn character_examples() {
        let r = ring();
        assert_eq!(ChernData::structure_sheaf().character(&r), ChowClass::one());
        // ch(O(p,q)) = 1 + (pH+qE) + ½(p²H²+q²E²) + (p³+q³)/6 [pt]
        for (p, q) in [(1, 0), (2, -1), (-3, 4), (0, 5)] {
            let expected = ChowClass::new(
                rat(1),
                rat(p),
                rat(q),
                frac(p * p, 2),
                frac(q * q, 2),
                frac(p * p * p + q * q * q, 6),
            );
            assert_eq!(
                ChernData::line_bundle(Twist::new(p, q)).character(&r),
                expected
            );
        }
        for (k, l) in [(1, 0), (3, -2), (-4, 7)] {
            assert_eq!(
                cd(2, 0, 0, k, l, 0).character(&r),
                ChowClass::from_ints(2, 0, 0, -k, -l, 0)
            );
        }
    }

    #[test]
    fn character_matches_displayed_expansion() {
        let r = ring();
        for &(rk, a, b, k, l, m) in &[
            (2, 1, -1, 3, 2, 1),
            (3, -2, 4, 0, 5, 7),
            (0, 0, 0, 1, 1, -2),
        ] {
            let expected = ChowClass::new(
                rat(rk),
                rat(a),
                rat(b),
                frac(a * a - 2 * k, 2),
                frac(b * b - 2 * l, 2),
                frac(a * a * a + b * b * b - 3 * a * k - 3 * b * l + 3 * m, 6),
            );
            assert_eq!(cd(rk, a, b, k, l, m).character(&r), expected);
        }
    }

    #[test]
    fn chi_line_bundle_examples() {
        assert_eq!(chi_line_bundle(Twist::new(0, 0)), 1);
        assert_eq!(chi_line_bundle(Twist::new(2, -1)), 9);
        assert_eq!(chi_line_bundle(Twist::new(0, -1)), 0);
        assert_eq!(chi_line_bundle(Twist::new(1, 0)), 4);
    }

    #[test]
    fn euler_examples() {
        let o = ChernData::structure_sheaf();
        for p in -4..=4 {
            for q in -4..=4 {
                let t = Twist::new(p, q);
                assert_eq!(o.euler_characteristic(t).unwrap(), chi_line_bundle(t));
            }
        }
        assert_eq!(
            cd(1, 1, 0, 0, 0, 0)
                .euler_characteristic(Twist::new(1, 0))
                .unwrap(),
            10
        );
        assert_eq!(chi_line_bundle(Twist::new(2, 0)), 10);
        for k in -6..=6 {
            for l in -6..=6 {
                let d = cd(2, 0, 0, k, l, 0);
                assert_eq!(d.euler_characteristic(Twist::new(-2, 1)).unwrap(), 0);
            }
        }
    }

    #[test]
    fn euler_rejects_parity_violation() {
        let d = cd(2, 0, 0, 1, 0, 1);
        assert_eq!(
            d.euler_characteristic(Twist::ZERO),
            Err(Error::NonIntegralEuler)
        );
        assert!(matches!(
            ChernData::new(2, 0, 0, 1, 0, 1),
            Err(Error::ParityViolation { .. })
        ));
        assert_eq!(
            ChernData::new(-1, 0, 0, 0, 0, 0),
            Err(Error::NegativeRank(-1))
        );
    }

    #[test]
    fn twist_examples() {
        let r = ring();
        let d = cd(2, 1, -1, 3, 2, 0);
        assert_eq!(d.twisted(&r, Twist::ZERO), d);
        for (a, b, p, q) in [(1, -1, 2, 3), (0, 0, -2, 1), (-3, 2, 1, -4)] {
            let t = cd(2, a, b, 5, -1, 0).twisted(&r, Twist::new(p, q));
            assert_eq!((t.a(), t.b()), (a + 2 * p, b + 2 * q));
            // ring-derived c2: p² and q², not the a², b² shorthand
            assert_eq!((t.k(), t.l()), (5 + a * p + p * p, -1 + b * q + q * q));
            assert_eq!(t.m(), 0);
        }
        let t = cd(2, 0, 0, 7, 3, 0).twisted(&r, Twist::new(-2, 1));
        assert_eq!((t.k(), t.l()), (11, 4));
    }

    #[test]
    fn dual_examples() {
        let d = cd(2, 0, 0, 3, 1, 2);
        assert_eq!(d.dual_rank2().unwrap(), d);
        assert_eq!(
            cd(2, 1, -1, 3, 1, 2).dual_rank2().unwrap(),
            cd(2, -1, 1, 3, 1, 2)
        );
        assert_eq!(cd(3, 0, 0, 0, 0, 0).dual_rank2(), Err(Error::RankNotTwo(3)));
        assert_eq!(cd(0, 0, 0, 0, 0, 0).dual_rank2(), Err(Error::RankNotTwo(0)));
    }

    #[test]
    fn parity_examples() {
        assert!(cd(2, 0, 0, 1, 0, 0).is_parity_consistent());
        assert!(!cd(2, 0, 0, 1, 0, 1).is_parity_consistent());
        assert!(cd(1, 0, 0, 0, 0, 0).is_parity_consistent());
    }

    #[test]
    fn locally_free_examples() {
        assert_eq!(
            cd(2, 0, 0, 1, 0, 0).is_locally_free_reflexive_rank2(),
            Ok(true)
        );
        assert_eq!(
            cd(2, 0, 0, 1, 0, 2).is_locally_free_reflexive_rank2(),
            Ok(false)
        );
        assert_eq!(
            cd(2, 0, 0, 2, 1, -2).is_locally_free_reflexive_rank2(),
            Ok(false)
        );
        assert!(cd(2, 0, 0, 2, 1, -2).is_parity_consistent());
        assert_eq!(
            cd(1, 0, 0, 0, 0, 0).is_locally_free_reflexive_rank2(),
            Err(Error::RankNotTwo(1))
        );
    }

    #[test]
    fn from_character_rejects_fractional() {
        let r = ring();
        let ch = ChowClass::new(rat(1), frac(1, 2), rat(0), rat(0), rat(0), rat(0));
        assert_eq!(
            ChernData::from_character(&r, &ch),
            Err(Error::NonIntegralChern)
        );
    }

    fn parity_data() -> impl Strategy<Value = ChernData> {
        (
            0i64..=4,
            -6i64..=6,
            -6i64..=6,
            -10i64..=10,
            -10i64..=10,
            -5i64..=5,
        )
            .prop_map(|(r, a, b, k, l, m)| {
                let mut d = cd(r, a, b, k, l, m);
                if !d.is_parity_consistent() {
                    d.m += 1;
                }
                d
            })
    }

    fn twist() -> impl Strategy<Value = Twist> {
        (-8i64..=8, -8i64..=8).prop_map(|(p, q)| Twist::new(p, q))
    }

    proptest! {
        #[test]
        fn twist_is_a_homomorphism(d in parity_data(), t1 in twist(), t2 in twist()) {
            let r = ring();
            prop_assert_eq!(d.twisted(&r, t1).twisted(&r, t2), d.twisted(&r, t1 + t2));
        }

        #[test]
        fn closed_form_matches_hrr(d in parity_data(), t in twist()) {
            let r = ring();
            let hrr = r.hirzebruch_riemann_roch(&d.twisted(&r, t).character(&r));
            prop_assert_eq!(rat(d.euler_characteristic(t).unwrap()), hrr);
        }

        #[test]
        fn serre_duality_numerics(k in -15i64..=15, l in -15i64..=15, t in twist()) {
            let r = ring();
            let d = cd(2, 0, 0, k, l, 0);
            let partner = Twist::new(-4 - t.p, 2 - t.q);
            let lhs = d.twisted(&r, t).euler_characteristic(Twist::ZERO).unwrap();
            let rhs = d.twisted(&r, partner).euler_characteristic(Twist::ZERO).unwrap();
            prop_assert_eq!(lhs, -rhs);
        }

        #[test]
        fn line_bundle_chi_agrees(t in twist()) {
            prop_assert_eq!(chi_line_bundle(t), ChernData::structure_sheaf().euler_characteristic(t).unwrap());
        }

        #[test]
        fn parity_iff_integral_euler(r in 0i64..=4, a in -6i64..=6, b in -6i64..=6,
                                     k in -10i64..=10, l in -10i64..=10, m in -5i64..=5, t in twist()) {
            let d = cd(r, a, b, k, l, m);
            prop_assert_eq!(d.is_parity_consistent(), d.euler_characteristic(t).is_ok());
        }

        #[test]
        fn dual_is_involution(d in parity_data()) {
            let d2 = cd(2, d.a, d.b, d.k, d.l, d.m);
            prop_assert_eq!(d2.dual_rank2().unwrap().dual_rank2().unwrap(), d2);
        }

        #[test]
        fn character_round_trip(d in parity_data(), minus in any::<bool>()) {
            let r = if minus { ChowRing::new(crate::Epsilon::Minus) } else { ring() };
            prop_assert_eq!(ChernData::from_character(&r, &d.character(&r)).unwrap(), d);
        }
    }
}
