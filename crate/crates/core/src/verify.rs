//! Named verification suites.
//!
//! Each suite expands into independent cases, evaluated in parallel and
//! reported in construction order. A case passes when its residual is zero
//! or its two sides are equal; on failure the residual holds both sides.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hsu_shiue::{hs_coeff_sum, hs_egf, hs_pair, hs_pde_residual, hs_triangle_rec, HSParams};
use crate::ordering::{
    blasiak_identity_check, cahill_glauber_symbol, laguerre_power, laguerre_power_anti_normal,
    oracle_exponential, oracle_power_anti_normal, oracle_power_normal, ordinary_array_coeffs,
    power_normal_form, s_ordered_symbol, weyl_aaa_ordinary_pair, weyl_power_aaa,
    weyl_power_coefficient,
};
use crate::rational::{binomial, factorial, format_rational, rat, Rational};
use crate::riordan::{CatalogSequence, Convention, Ladder, RiordanPair};
use crate::series::TruncSeries;
use crate::spoly::SParamPoly;
use crate::two_point::{
    closed_form_e1, quartic_coefficients, quartic_residual, two_point_egf, two_point_inverse,
    TwoPointParams,
};
use crate::weyl::{
    convert_order, mixed_derivative, s_derivative, s_quantize, s_transform, weyl_quantize,
    weyl_quantize_enumerated, ClassicalPoly, NormalForm, SingleAnnihilatorWord,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    MainTheorem,
    CahillGlauber,
    Katriel,
    Laguerre,
    HsuShiue,
    TwoPoint,
    E1ClosedForm,
    Quartic,
    WeylPower,
    Conversion,
    RiordanGroup,
    Blasiak,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::MainTheorem,
        Suite::CahillGlauber,
        Suite::Katriel,
        Suite::Laguerre,
        Suite::HsuShiue,
        Suite::TwoPoint,
        Suite::E1ClosedForm,
        Suite::Quartic,
        Suite::WeylPower,
        Suite::Conversion,
        Suite::RiordanGroup,
        Suite::Blasiak,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MainTheorem => "main-theorem",
            Suite::CahillGlauber => "cahill-glauber",
            Suite::Katriel => "katriel",
            Suite::Laguerre => "laguerre",
            Suite::HsuShiue => "hsu-shiue",
            Suite::TwoPoint => "two-point",
            Suite::E1ClosedForm => "e1-closed-form",
            Suite::Quartic => "quartic",
            Suite::WeylPower => "weyl-power",
            Suite::Conversion => "conversion",
            Suite::RiordanGroup => "riordan-group",
            Suite::Blasiak => "blasiak",
        }
    }

    /// Truncation order used when none is given.
    pub fn default_order(self) -> usize {
        match self {
            Suite::MainTheorem | Suite::WeylPower | Suite::Blasiak => 6,
            Suite::CahillGlauber | Suite::Laguerre | Suite::TwoPoint | Suite::Quartic => 8,
            Suite::Conversion => 8,
            Suite::Katriel | Suite::HsuShiue | Suite::E1ClosedForm | Suite::RiordanGroup => 10,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// λ-order, row count or degree bound, depending on the suite.
    pub order: Option<usize>,
    /// Largest `L + R` for word-indexed suites.
    pub max_lr: u32,
    /// Seed for the randomized suites.
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            order: None,
            max_lr: 4,
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseResult {
    pub params: Value,
    pub status: Status,
    pub residual: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| c.status == Status::Fail)
    }
}

struct Outcome {
    pass: bool,
    residual: Value,
}

impl Outcome {
    fn compare<T: Serialize + PartialEq>(got: &T, expected: &T) -> Self {
        if got == expected {
            Self::ok()
        } else {
            Self {
                pass: false,
                residual: json!({ "got": got, "expected": expected }),
            }
        }
    }

    fn zero<T: Serialize>(residual: &T, is_zero: bool) -> Self {
        Self {
            pass: is_zero,
            residual: if is_zero { Value::Null } else { json!(residual) },
        }
    }

    fn ok() -> Self {
        Self {
            pass: true,
            residual: Value::Null,
        }
    }

    /// Merges named sub-checks; the residual lists the failing ones.
    fn all(parts: Vec<(&'static str, Outcome)>) -> Self {
        let failed: serde_json::Map<String, Value> = parts
            .into_iter()
            .filter(|(_, o)| !o.pass)
            .map(|(name, o)| (name.to_string(), o.residual))
            .collect();
        if failed.is_empty() {
            Self::ok()
        } else {
            Self {
                pass: false,
                residual: Value::Object(failed),
            }
        }
    }
}

type Check = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

struct Case {
    params: Value,
    check: Check,
}

fn case(params: Value, check: impl Fn() -> Result<Outcome> + Send + Sync + 'static) -> Case {
    Case {
        params,
        check: Box::new(check),
    }
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<SuiteReport> {
    let order = config.order.unwrap_or_else(|| suite.default_order());
    let cases = match suite {
        Suite::MainTheorem => main_theorem(config.max_lr, order),
        Suite::CahillGlauber => cahill_glauber(order),
        Suite::Katriel => katriel(order),
        Suite::Laguerre => laguerre(order),
        Suite::HsuShiue => hsu_shiue(order, config.seed),
        Suite::TwoPoint => two_point(order, config.seed),
        Suite::E1ClosedForm => e1_closed_form(order),
        Suite::Quartic => quartic(order),
        Suite::WeylPower => weyl_power(order),
        Suite::Conversion => conversion(order, config.seed),
        Suite::RiordanGroup => riordan_group(order)?,
        Suite::Blasiak => blasiak(order),
    };
    let cases = cases
        .into_par_iter()
        .map(|c| {
            let outcome = (c.check)().unwrap_or_else(|e| Outcome {
                pass: false,
                residual: json!({ "error": e.to_string() }),
            });
            CaseResult {
                params: c.params,
                status: if outcome.pass { Status::Pass } else { Status::Fail },
                residual: outcome.residual,
            }
        })
        .collect();
    Ok(SuiteReport {
        suite: suite.name().to_string(),
        cases,
    })
}

fn words(max_lr: u32) -> Vec<SingleAnnihilatorWord> {
    (1..=max_lr)
        .flat_map(|t| (0..=t).rev().map(move |l| SingleAnnihilatorWord::new(l, t - l).unwrap()))
        .collect()
}

fn word(l: u32, r: u32) -> SingleAnnihilatorWord {
    SingleAnnihilatorWord::new(l, r).unwrap()
}

fn random_rational(rng: &mut StdRng, nonzero: bool) -> Rational {
    loop {
        let q = Rational::new(rng.random_range(-6i64..=6).into(), rng.random_range(1i64..=4).into());
        if !(nonzero && q.is_zero()) {
            return q;
        }
    }
}

fn main_theorem(max_lr: u32, order: usize) -> Vec<Case> {
    words(max_lr)
        .into_iter()
        .map(|w| {
            case(json!({ "L": w.left, "R": w.right, "N": order }), move || {
                let symbol = s_ordered_symbol(&w, &SParamPoly::s(), order)?;
                Ok(Outcome::compare(&symbol.quantize(), &oracle_exponential(&w, order)))
            })
        })
        .collect()
}

fn cahill_glauber(order: usize) -> Vec<Case> {
    vec![case(json!({ "L": 1, "R": 0, "N": order }), move || {
        let s = SParamPoly::s();
        let closed = cahill_glauber_symbol(&s, order)?;
        let two_point = s_ordered_symbol(&word(1, 0), &s, order)?;
        Ok(Outcome::compare(&closed, &two_point))
    })]
}

fn katriel(order: usize) -> Vec<Case> {
    let mut cases = Vec::new();
    for (l, r, shift) in [(1u32, 0u32, 0usize), (0, 1, 1)] {
        for n in 0..=order {
            cases.push(case(json!({ "L": l, "R": r, "n": n }), move || {
                let stirling = CatalogSequence::Touchard.row_polynomial(n + shift);
                let expected = NormalForm::from_terms(
                    stirling
                        .into_iter()
                        .enumerate()
                        .skip(shift)
                        .map(|(k, c)| (((k - shift) as u32, (k - shift) as u32), SParamPoly::constant(c))),
                );
                Ok(Outcome::compare(&power_normal_form(&word(l, r), n), &expected))
            }));
        }
    }
    cases
}

fn laguerre(order: usize) -> Vec<Case> {
    (0..=order)
        .map(|n| {
            case(json!({ "n": n }), move || {
                let w = word(1, 1);
                let normal = oracle_power_normal(&w, n as u32).pop().unwrap();
                let anti = oracle_power_anti_normal(&w, n as u32).pop().unwrap();
                Ok(Outcome::all(vec![
                    ("normal", Outcome::compare(&laguerre_power(n as u32), &normal)),
                    ("anti-normal", Outcome::compare(&laguerre_power_anti_normal(n as u32), &anti)),
                ]))
            })
        })
        .collect()
}

const HS_CASES: usize = 50;
const TWO_POINT_CASES: usize = 25;

fn hsu_shiue(order: usize, seed: u64) -> Vec<Case> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..HS_CASES)
        .map(|i| {
            let p = HSParams::new(
                random_rational(&mut rng, false),
                random_rational(&mut rng, true),
                random_rational(&mut rng, false),
            );
            case(json!({ "case": i, "params": p }), move || {
                let rec = hs_triangle_rec(&p, order);
                let sum = crate::riordan::Triangle::from_fn(order, |n, k| {
                    SParamPoly::constant(hs_coeff_sum(&p, n, k).expect("B is nonzero"))
                });
                let egf = hs_egf(&p, order)?;
                let product = hs_pair(&p, order)?.group_product(&hs_pair(&p.dual(), order)?)?;
                let identity = RiordanPair::identity(order, Convention::Riordan);
                let pde = hs_pde_residual(&p, &egf);
                let pde_zero = pde.iter().flatten().all(|c| c.is_zero());
                Ok(Outcome::all(vec![
                    ("sum-vs-rec", Outcome::compare(&sum, &rec)),
                    ("rec-vs-egf", Outcome::compare(&egf.to_triangle(), &rec)),
                    ("sum-vs-egf", Outcome::compare(&sum, &egf.to_triangle())),
                    ("duality", Outcome::compare(&product, &identity)),
                    ("pde", Outcome::zero(&pde, pde_zero)),
                ]))
            })
        })
        .collect()
}

fn two_point(order: usize, seed: u64) -> Vec<Case> {
    let mut rng = StdRng::seed_from_u64(seed ^ 0x2b);
    (0..TWO_POINT_CASES)
        .map(|i| {
            let [a, b, r, rp] = std::array::from_fn(|_| random_rational(&mut rng, false));
            let params = json!({
                "case": i,
                "A": format_rational(&a), "B": format_rational(&b),
                "r": format_rational(&r), "r_prime": format_rational(&rp),
            });
            case(params, move || {
                let at = |s: i64| {
                    let p = TwoPointParams::new(a.clone(), b.clone(), r.clone(), rp.clone(), SParamPoly::from_int(s));
                    two_point_egf(&p, order)
                };
                let minus = hs_egf(&HSParams::new(-a.clone(), b.clone(), rp.clone()), order)?;
                let plus = hs_egf(&HSParams::new(a.clone(), -b.clone(), r.clone()), order)?;
                Ok(Outcome::all(vec![
                    ("s=-1", Outcome::compare(&at(-1)?, &minus)),
                    ("s=+1", Outcome::compare(&at(1)?, &plus)),
                ]))
            })
        })
        .collect()
}

fn e1_closed_form(order: usize) -> Vec<Case> {
    [(2, 0), (1, 1), (0, 2)]
        .into_iter()
        .map(|(l, r)| {
            case(json!({ "L": l, "R": r, "N": order }), move || {
                let s = SParamPoly::s();
                let closed = closed_form_e1(l, r, &s, order)?;
                let reverted = two_point_inverse(&TwoPointParams::for_word(&word(l, r), s), order)?;
                Ok(Outcome::all(vec![
                    ("g_bar", Outcome::compare(&closed.0, &reverted.0)),
                    ("f_bar", Outcome::compare(&closed.1, &reverted.1)),
                ]))
            })
        })
        .collect()
}

fn quartic(order: usize) -> Vec<Case> {
    let mut cases: Vec<Case> = [(3, 0), (2, 1), (1, 2), (0, 3)]
        .into_iter()
        .map(|(l, r)| {
            case(json!({ "L": l, "R": r, "N": order }), move || {
                let residual = quartic_residual(l, r, &SParamPoly::s(), order)?;
                Ok(Outcome::zero(&residual, residual.is_zero()))
            })
        })
        .collect();
    for s in [-1i64, 1] {
        cases.push(case(json!({ "s": s, "degenerate": true }), move || {
            let c = quartic_coefficients(&SParamPoly::from_int(s));
            let top: Vec<_> = c[..2].to_vec();
            let vanish = top.iter().flatten().all(|x| x.is_zero());
            Ok(Outcome::zero(&top, vanish))
        }));
    }
    cases
}

fn weyl_power(order: usize) -> Vec<Case> {
    let mut cases: Vec<Case> = (0..=order)
        .map(|n| {
            case(json!({ "n": n }), move || {
                let brute = weyl_quantize(&weyl_power_aaa(n as u32));
                let normal = oracle_power_normal(&word(1, 1), n as u32).pop().unwrap();
                Ok(Outcome::compare(&brute, &normal))
            })
        })
        .collect();
    let tri_order = 2 * order;
    cases.push(case(json!({ "triangle": tri_order }), move || {
        let (d, h) = weyl_aaa_ordinary_pair(tri_order)?;
        let tri = ordinary_array_coeffs(&d, &h, tri_order);
        let mut parts = Vec::new();
        let expected = crate::riordan::Triangle::from_fn(tri_order, |n, k| {
            if (n - k) % 2 == 1 {
                return SParamPoly::zero();
            }
            let j = ((n - k) / 2) as u32;
            let c = Rational::from_integer(binomial(n as u32, j));
            SParamPoly::constant(if j % 2 == 1 { -c } else { c })
        });
        parts.push(("ordinary-array", Outcome::compare(&tri, &expected)));
        let renormalized = crate::riordan::Triangle::from_fn(tri_order, |n, k| {
            let scale = Rational::new(factorial(n as u32), factorial(k as u32) << (n - k));
            tri.get(n, k).scale(&scale)
        });
        let coefficients = crate::riordan::Triangle::from_fn(tri_order, |n, k| {
            SParamPoly::constant(weyl_power_coefficient(n as u32, k as u32))
        });
        parts.push(("renormalized", Outcome::compare(&renormalized, &coefficients)));
        Ok(Outcome::all(parts))
    }));
    cases
}

/// Random normal form with `n + m ≤ degree`.
fn random_normal_form(rng: &mut StdRng, degree: u32) -> NormalForm {
    let terms = rng.random_range(1..=5);
    NormalForm::from_terms((0..terms).map(|_| {
        let n = rng.random_range(0..=degree);
        let m = rng.random_range(0..=degree - n);
        ((n, m), SParamPoly::constant(random_rational(rng, true)))
    }))
}

const CONVERSION_CASES: usize = 10;

fn conversion(degree: usize, seed: u64) -> Vec<Case> {
    let degree = degree as u32;
    let mut rng = StdRng::seed_from_u64(seed ^ 0xc0);
    let mut cases = Vec::new();
    for i in 0..CONVERSION_CASES {
        let g = random_normal_form(&mut rng, degree);
        let [s1, s2, s3] = std::array::from_fn(|_| SParamPoly::constant(random_rational(&mut rng, false)));
        cases.push(case(json!({ "case": i, "degree": degree }), move || {
            let s = SParamPoly::s();
            let f = s_transform(&g, &s);
            let heat = s_derivative(&f);
            let flow = mixed_derivative(&f).scale_rat(&Rational::new((-1).into(), 2.into()));
            let round_trip = s_transform(&s_quantize(&f, &s), &s);
            let via = convert_order(&convert_order(&f, &s1, &s2), &s2, &s3);
            let direct = convert_order(&f, &s1, &s3);
            let between = convert_order(&f, &s, &s1);
            Ok(Outcome::all(vec![
                ("quantize-transform", Outcome::compare(&s_quantize(&f, &s), &g)),
                ("transform-quantize", Outcome::compare(&round_trip, &f)),
                ("composition", Outcome::compare(&via, &direct)),
                ("conversion", Outcome::compare(&between, &s_transform(&g, &s1))),
                ("heat", Outcome::compare(&heat, &flow)),
            ]))
        }));
    }
    let limit = (degree + 2).min(crate::weyl::SHUFFLE_ENUMERATION_LIMIT);
    for total in 0..=limit {
        for n in 0..=total {
            let m = total - n;
            cases.push(case(json!({ "shuffle": [n, m] }), move || {
                let monomial = ClassicalPoly::from_int_terms(&[((n, m), 1)]);
                let formula = s_quantize(&monomial, &SParamPoly::zero());
                Ok(Outcome::compare(&weyl_quantize_enumerated(n, m)?, &formula))
            }));
        }
    }
    cases
}

fn riordan_group(order: usize) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for convention in [Convention::Riordan, Convention::Sheffer] {
        let pairs = CatalogSequence::ALL
            .into_iter()
            .map(|seq| {
                Ok(match convention {
                    Convention::Riordan => seq.riordan_pair(order)?,
                    Convention::Sheffer => seq.sheffer_pair(order)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let names = CatalogSequence::ALL.map(|s| s.name());
        for (i, x) in pairs.iter().enumerate() {
            for (j, y) in pairs.iter().enumerate() {
                for (k, z) in pairs.iter().enumerate() {
                    let (x, y, z) = (x.clone(), y.clone(), z.clone());
                    cases.push(case(
                        json!({ "convention": convention.name(), "axiom": "associativity", "pairs": [names[i], names[j], names[k]] }),
                        move || {
                            let left = x.group_product(&y)?.group_product(&z)?;
                            let right = x.group_product(&y.group_product(&z)?)?;
                            Ok(Outcome::compare(&left, &right))
                        },
                    ));
                }
            }
            let x = x.clone();
            cases.push(case(
                json!({ "convention": convention.name(), "axiom": "identity-inverse", "pairs": [names[i]] }),
                move || {
                    let id = RiordanPair::identity(order, convention);
                    let inv = x.group_inverse()?;
                    Ok(Outcome::all(vec![
                        ("left-identity", Outcome::compare(&id.group_product(&x)?, &x)),
                        ("right-identity", Outcome::compare(&x.group_product(&id)?, &x)),
                        ("left-inverse", Outcome::compare(&inv.group_product(&x)?, &id)),
                        ("right-inverse", Outcome::compare(&x.group_product(&inv)?, &id)),
                    ]))
                },
            ));
        }
    }
    const LADDER_ROWS: usize = 8;
    for seq in CatalogSequence::ALL {
        for n in 0..=LADDER_ROWS {
            cases.push(case(json!({ "sequence": seq.name(), "ladder": n }), move || {
                let pair = seq.sheffer_pair(LADDER_ROWS + 1)?;
                let as_poly = |row: Vec<Rational>| -> Vec<SParamPoly> {
                    row.into_iter().map(SParamPoly::constant).collect()
                };
                let sn = as_poly(seq.row_polynomial(n));
                let up = pair.ladder_apply(Ladder::Raising, &sn)?;
                let down = pair.ladder_apply(Ladder::Lowering, &sn)?;
                let expected_down = if n == 0 {
                    vec![]
                } else {
                    as_poly(seq.row_polynomial(n - 1).into_iter().map(|c| c * rat(n as i64)).collect())
                };
                Ok(Outcome::all(vec![
                    ("raising", Outcome::compare(&up, &as_poly(seq.row_polynomial(n + 1)))),
                    ("lowering", Outcome::compare(&down, &expected_down)),
                ]))
            }));
        }
    }
    Ok(cases)
}

fn blasiak(order: usize) -> Vec<Case> {
    let pair_order = 3 * order + 1;
    let named: Vec<(&'static str, Option<CatalogSequence>)> = vec![
        ("identity", None),
        ("touchard", Some(CatalogSequence::Touchard)),
        ("hermite", Some(CatalogSequence::Hermite)),
        ("laguerre", Some(CatalogSequence::Laguerre)),
    ];
    named
        .into_iter()
        .map(|(name, seq)| {
            case(json!({ "pair": name, "N_D": order, "N_lambda": order }), move || {
                let pair = match seq {
                    Some(seq) => seq.sheffer_pair(pair_order)?,
                    None => RiordanPair::sheffer(TruncSeries::one(pair_order), TruncSeries::var(pair_order))?,
                };
                let residual = blasiak_identity_check(&pair, order, order)?;
                Ok(Outcome::zero(&residual, residual.is_zero()))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(order: usize) -> SuiteConfig {
        SuiteConfig {
            order: Some(order),
            max_lr: 2,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for suite in Suite::ALL {
            let report = run_suite(suite, &small(3)).unwrap();
            assert!(!report.cases.is_empty(), "{suite}");
            assert!(report.passed(), "{suite}: {}", serde_json::to_string(&report).unwrap());
        }
    }

    #[test]
    fn report_shape() {
        let report = run_suite(Suite::MainTheorem, &small(2)).unwrap();
        let v = serde_json::to_value(&report).unwrap();
        assert_eq!(v["suite"], "main-theorem");
        assert_eq!(v["cases"][0]["status"], "pass");
        assert_eq!(v["cases"][0]["params"], json!({ "L": 1, "R": 0, "N": 2 }));
        assert!(v["cases"][0]["residual"].is_null());
    }

    #[test]
    fn failures_carry_both_sides() {
        let o = Outcome::compare(&SParamPoly::from_int(1), &SParamPoly::from_int(2));
        assert!(!o.pass);
        assert!(o.residual.get("got").is_some());
        assert!(Outcome::all(vec![("x", Outcome::ok()), ("y", o)]).residual.get("y").is_some());
    }
}
