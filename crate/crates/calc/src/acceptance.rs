//! The acceptance suite: eleven exact checks, shared by `selftest` and the
//! `acceptance` test target.

use std::fmt;

use blowup_core::cohomology::{cohomology_table, is_cohomologically_trivial};
use blowup_core::curves::grr_pushforward;
use blowup_core::deformation::transform_deformation_report;
use blowup_core::instanton::{is_admissible_charge, monad_chern_check, monad_shape};
use blowup_core::sheafdata::chi_line_bundle;
use blowup_core::transform::{iterate_transforms, thooft_seed, transform_charge};
use blowup_core::{
    BundleDescriptor, ChernData, ChowClass, ChowRing, CohomTable, CurveComponent, CurveProfile,
    CurveSheafData, ElementaryData, ElementaryStep, Epsilon, InstantonData, LineType, Rational,
    Twist,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_b10c;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    /// Number of exact comparisons made, or the first counterexample.
    pub detail: String,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "criterion {:>2} {status} {}: {}",
            self.id, self.name, self.detail
        )
    }
}

/// Counts comparisons and keeps the first failure.
#[derive(Default)]
struct Tally {
    checks: usize,
    failure: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn finish(self, id: u8, name: &'static str) -> CriterionResult {
        let passed = self.failure.is_none();
        let detail = self
            .failure
            .unwrap_or_else(|| format!("{} exact checks", self.checks));
        CriterionResult {
            id,
            name,
            passed,
            detail,
        }
    }
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn ring() -> ChowRing {
    ChowRing::new(Epsilon::Plus)
}

fn line(p: i64, q: i64) -> CohomTable {
    cohomology_table(BundleDescriptor::line(p, q))
}

pub fn golden_chi() -> CriterionResult {
    let r = ring();
    let mut t = Tally::default();
    for ((p, q), chi) in [((0, 0), 1), ((2, -1), 9), ((0, -1), 0), ((1, 0), 4)] {
        let hrr = r.hirzebruch_riemann_roch(&r.line_bundle_character(p, q));
        let closed = ChernData::line_bundle(Twist::new(p, q)).euler_characteristic(Twist::ZERO);
        t.check(hrr == rat(chi), || {
            format!("HRR χ(O({p},{q})) = {hrr}, expected {chi}")
        });
        t.check(closed == Ok(chi), || {
            format!("χ(O({p},{q})) = {closed:?}, expected {chi}")
        });
        t.check(line(p, q).euler_characteristic() == chi, || {
            format!("table χ of O({p},{q}) is not {chi}")
        });
    }
    let table = line(2, -1);
    t.check(table == CohomTable::new(9, 0, 0, 0), || {
        format!("table of O(2,-1) is {table:?}")
    });
    t.finish(1, "golden Euler characteristics")
}

pub fn trivial_block() -> CriterionResult {
    let mut t = Tally::default();
    for p in -3..=-1 {
        for q in 0..=2 {
            let b = BundleDescriptor::line(p, q);
            t.check(is_cohomologically_trivial(b), || {
                format!("O({p},{q}) has {:?}", cohomology_table(b))
            });
        }
    }
    t.finish(2, "cohomologically trivial block")
}

pub fn middle_vanishing() -> CriterionResult {
    let mut t = Tally::default();
    for p in -30..=30 {
        for q in -30..=30 {
            let h = line(p, q);
            t.check(h.h1 * h.h2 == 0, || {
                format!("O({p},{q}) has h1 = {}, h2 = {}", h.h1, h.h2)
            });
        }
    }
    t.finish(3, "h1·h2 = 0 sweep")
}

pub fn serre_symmetry() -> CriterionResult {
    let mut t = Tally::default();
    for p in -30..=30 {
        for q in -30..=30 {
            let (a, b) = (line(p, q), line(-4 - p, 2 - q));
            t.check(a == b.reversed(), || {
                format!("O({p},{q}): {a:?} vs reversed {b:?}")
            });
        }
    }
    t.finish(4, "Serre duality symmetry")
}

fn random_chern(rng: &mut ChaCha8Rng) -> ChernData {
    let r = rng.random_range(0..=5);
    let [a, b, k, l] = [(); 4].map(|_| rng.random_range(-12i64..=12));
    let m = rng.random_range(-12..=12);
    // shift m onto the parity class k(a+4) − l(b−6)
    let m = m + (m - k * (a + 4) + l * (b - 6)).rem_euclid(2);
    ChernData::new(r, a, b, k, l, m).expect("parity fixed above")
}

pub fn todd_cross_oracle() -> CriterionResult {
    let r = ring();
    let mut t = Tally::default();
    for p in -10..=10 {
        for q in -10..=10 {
            let ch = r.line_bundle_character(p, q);
            let hrr = r.mul(&ch, r.todd_class().class()).degree();
            let chi = chi_line_bundle(Twist::new(p, q));
            t.check(hrr == rat(chi), || {
                format!("O({p},{q}): ∫ch·td = {hrr}, χ = {chi}")
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..500 {
        let d = random_chern(&mut rng);
        let tw = Twist::new(rng.random_range(-10..=10), rng.random_range(-10..=10));
        let ch = r.mul(&d.character(&r), &tw.character(&r));
        let hrr = r.hirzebruch_riemann_roch(&ch);
        let closed = d.euler_characteristic(tw);
        t.check(closed.clone().map(rat) == Ok(hrr), || {
            format!("{d:?} at {tw:?}: {closed:?} vs HRR {hrr}")
        });
    }
    t.finish(5, "Todd class and Riemann–Roch cross-check")
}

pub fn monad_identities() -> CriterionResult {
    let r = ring();
    let mut t = Tally::default();
    for k in 0..=8 {
        for l in 0..=8 {
            for gamma in 0..=8 {
                if !is_admissible_charge(2, k, l) {
                    continue;
                }
                let d = InstantonData::new(2, k, l, 0, gamma).expect("admissible");
                let s = monad_shape(&d);
                let ch = s.character(&r);
                let what = || format!("charge ({k},{l}), γ = {gamma}: {ch}");
                t.check(s.alternating_rank() == 2, what);
                t.check(ch.part(0) == ChowClass::from_ints(2, 0, 0, 0, 0, 0), what);
                t.check(ch.part(1).is_zero(), what);
                // c1 = 0, so ch2 = −c2
                t.check(ch.part(2) == ChowClass::curve(-k, -l), what);
                t.check(monad_chern_check(&r, &d, &s), what);
            }
        }
    }
    t.finish(6, "monad rank and Chern identities")
}

pub fn instanton_chi() -> CriterionResult {
    let mut t = Tally::default();
    for k in -20..=20 {
        for l in -20..=20 {
            let d =
                ChernData::new(2, 0, 0, k, l, 0).expect("m = 0 is parity-consistent when c1 = 0");
            let chi = d.euler_characteristic(Twist::new(-2, 1));
            t.check(chi == Ok(0), || {
                format!("charge ({k},{l}): χ(F(-2,1)) = {chi:?}")
            });
        }
    }
    t.finish(7, "χ(F(-2,1)) = 0")
}

/// Multisets of size `0..=max` drawn from `pool`.
fn multisets(pool: &[CurveComponent], max: usize) -> Vec<Vec<CurveComponent>> {
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<(usize, Vec<CurveComponent>)> = vec![(0, Vec::new())];
    for _ in 0..max {
        let mut next = Vec::new();
        for (start, set) in &frontier {
            for (i, c) in pool.iter().enumerate().skip(*start) {
                let mut grown = set.clone();
                grown.push(*c);
                out.push(grown.clone());
                next.push((i, grown));
            }
        }
        frontier = next;
    }
    out
}

pub fn grr_quotient() -> CriterionResult {
    let pool = [
        CurveComponent::pullback_line(),
        CurveComponent::fiber_line(),
        CurveComponent::exceptional_line(),
        CurveComponent::custom(2, 0, 0),
        CurveComponent::custom(3, 1, 1),
        CurveComponent::custom(4, -2, 3),
    ];
    let mut t = Tally::default();
    for r in [ChowRing::new(Epsilon::Plus), ChowRing::new(Epsilon::Minus)] {
        for set in multisets(&pool, 5) {
            let data = CurveSheafData::theta_characteristic_degrees(CurveProfile::new(set, true));
            let ch = grr_pushforward(&r, &data, Twist::new(2, -1));
            t.check(ch.pt.numer() == &0, || {
                format!("{:?}: [pt] coefficient {}", data.profile(), ch.pt)
            });
        }
    }
    t.finish(8, "GRR quotient has vanishing ch3")
}

fn step(tag: LineType) -> ElementaryStep {
    ElementaryStep::catalog(tag).expect("catalogued line")
}

pub fn transform_charges() -> CriterionResult {
    let r = ring();
    let mut t = Tally::default();
    let tags = [
        LineType::PullbackLine,
        LineType::FiberLine,
        LineType::ExceptionalLine,
    ];
    for k in 0..=10 {
        for l in -1..=10 {
            let Ok(seed) = thooft_seed(k, l) else {
                continue;
            };
            for (tag, expected) in [
                (LineType::PullbackLine, (k + 1, l)),
                (LineType::FiberLine, (k + 1, l + 1)),
            ] {
                let e = ElementaryData::new(seed.data, step(tag));
                let got = transform_charge(&r, &e).map(|d| d.charge());
                t.check(got == Ok(expected), || {
                    format!("({k},{l}) along {tag:?}: {got:?}")
                });
            }
            // every step list of length ≤ 4
            let mut lists: Vec<Vec<LineType>> = vec![Vec::new()];
            for _ in 0..4 {
                let longer: Vec<_> = lists
                    .iter()
                    .filter(|s| s.len() == lists.last().map_or(0, Vec::len))
                    .flat_map(|s| tags.iter().map(move |&tag| [s.as_slice(), &[tag]].concat()))
                    .collect();
                lists.extend(longer);
            }
            for list in lists {
                let steps: Vec<_> = list.iter().copied().map(step).collect();
                let Ok(points) = iterate_transforms(&r, &seed.data, &steps) else {
                    t.check(false, || format!("({k},{l}) along {list:?} was rejected"));
                    continue;
                };
                let mut expected = (k, l);
                for (i, tag) in list.iter().enumerate() {
                    match tag {
                        LineType::PullbackLine => expected.0 += 1,
                        LineType::FiberLine => expected = (expected.0 + 1, expected.1 + 1),
                        _ => expected.1 -= 1,
                    }
                    let got = points[i + 1].charge();
                    t.check(got == expected, || {
                        format!("({k},{l}) along {list:?}, step {i}: {got:?}")
                    });
                }
            }
        }
    }
    t.finish(9, "transform charges and concatenation")
}

pub fn deformation_totals() -> CriterionResult {
    let mut t = Tally::default();
    for k in -10..=10 {
        for l in -10..=10 {
            if !is_admissible_charge(2, k, l) {
                continue;
            }
            for (tag, ext1, h0) in [
                (LineType::PullbackLine, 8 * (k + 1) - 4 * l - 3, 5),
                (LineType::FiberLine, 8 * k - 4 * l + 1, 3),
            ] {
                let what = || format!("({k},{l}) along {tag:?}");
                let Ok(rep) = transform_deformation_report(k, l, tag) else {
                    t.check(false, what);
                    continue;
                };
                t.check(rep.ext1 == ext1 && rep.h0_local_ext == h0, what);
                t.check(rep.ext1 == rep.h0_local_ext as i64 + rep.h1_hom, what);
                let (k1, l1) = rep.boundary_component;
                t.check(rep.ext1 == 8 * k1 - 4 * l1 - 3, what);
            }
        }
    }
    t.finish(10, "deformation totals and boundary coherence")
}

pub fn parity_and_freeness() -> CriterionResult {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 11);
    for _ in 0..200 {
        let [a, b, k, l, m] = [(); 5].map(|_| rng.random_range(-12..=12));
        let d = ChernData::new_unchecked(2, a, b, k, l, m);
        let parity = d.is_parity_consistent();
        for p in -5..=5 {
            for q in -5..=5 {
                let integral = d.euler_characteristic_exact(Twist::new(p, q)).is_integer();
                t.check(integral == parity, || {
                    format!("{d:?} at ({p},{q}): parity {parity}, integral {integral}")
                });
            }
        }
        if parity {
            let verdict = d.is_locally_free_reflexive_rank2();
            t.check(verdict == Ok(m == 0), || {
                format!("{d:?}: locally free verdict {verdict:?}")
            });
        }
    }
    t.finish(11, "parity and local freeness")
}

pub fn run_all() -> Vec<CriterionResult> {
    vec![
        golden_chi(),
        trivial_block(),
        middle_vanishing(),
        serre_symmetry(),
        todd_cross_oracle(),
        monad_identities(),
        instanton_chi(),
        grr_quotient(),
        transform_charges(),
        deformation_totals(),
        parity_and_freeness(),
    ]
}
