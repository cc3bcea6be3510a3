//! Named identity checks and the table emitter.
//!
//! Every headline identity of the library is registered here as a named,
//! parameterized check. A check walks its full verified range, returns a
//! machine-readable [`IdentityReport`], and on failure carries a
//! counterexample precise enough to re-run by hand through the module
//! operations. Checks are deterministic given their parameters — random
//! orders are derived from explicit seeds — and independent of each other,
//! so they can be run in any order or in parallel without changing output.

use std::collections::BTreeMap;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;

use crate::biject::{gamma_min_one, gamma_symmetric, phi, PairMapS};
use crate::error::{Error, Result};
use crate::eulerian::{
    conger_poly, eulerian, lemma_drop_rhs, stat_polynomial_by_class, symmetrized_bar,
    symmetrized_tilde, typeb_des_poly_rec, typeb_count_rec,
};
use crate::gamma::{gamma_vector, is_palindromic};
use crate::order::LinearOrder;
use crate::perm::{enumerate_capped, ColorScheme, GroupSpec, Letter, DEFAULT_ENUMERATION_CAP};
use crate::poly::IntPoly;
use crate::series::{brenti_lhs, brenti_rhs, carlitz_lhs, carlitz_rhs, carlitz_rhs_as_printed};
use crate::stats::{bexc, ldes, lexc, StatName};
use crate::sturm::is_real_rooted;

/// Enumeration limits under which a check agrees to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_elements: u128,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_elements: DEFAULT_ENUMERATION_CAP }
    }
}

/// A check id with its parameter assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckSpec {
    pub id: String,
    pub params: BTreeMap<String, i64>,
    pub bounds: Bounds,
}

impl CheckSpec {
    /// The named check with its default parameters.
    pub fn by_id(id: &str) -> Result<CheckSpec> {
        let def = find_check(id)?;
        Ok(CheckSpec {
            id: def.id.to_string(),
            params: def.defaults.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            bounds: Bounds::default(),
        })
    }

    /// Overrides one parameter; unknown names are rejected by
    /// [`run_check`].
    pub fn with_param(mut self, key: &str, value: i64) -> CheckSpec {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn with_bounds(mut self, bounds: Bounds) -> CheckSpec {
        self.bounds = bounds;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// Outcome of one check run.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub check: String,
    pub params: BTreeMap<String, i64>,
    pub status: CheckStatus,
    /// Present exactly when the check failed; quotes the inputs that broke
    /// the identity.
    pub counterexample: Option<String>,
    /// Elements or cells examined.
    pub examined: u64,
    pub wall_ms: u64,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }

    /// One tab-separated line: id, status, examined, wall_ms,
    /// counterexample (when failing).
    pub fn to_tsv(&self) -> String {
        let status = if self.passed() { "pass" } else { "fail" };
        match &self.counterexample {
            Some(cx) => format!("{}\t{}\t{}\t{}\t{}", self.check, status, self.examined, self.wall_ms, cx),
            None => format!("{}\t{}\t{}\t{}", self.check, status, self.examined, self.wall_ms),
        }
    }
}

struct Outcome {
    examined: u64,
    counterexample: Option<String>,
}

impl Outcome {
    fn pass(examined: u64) -> Self {
        Outcome { examined, counterexample: None }
    }

    fn fail(examined: u64, counterexample: String) -> Self {
        Outcome { examined, counterexample: Some(counterexample) }
    }
}

struct CheckDef {
    id: &'static str,
    summary: &'static str,
    defaults: &'static [(&'static str, i64)],
    run: fn(&BTreeMap<String, i64>, Bounds) -> Result<Outcome>,
}

/// The registry itself: one entry per verified identity.
const CHECKS: &[CheckDef] = &[
    CheckDef {
        id: "table-n6",
        summary: "restricted descent and excedance tables at n = 6 match their frozen values",
        defaults: &[],
        run: check_table_n6,
    },
    CheckDef {
        id: "thm1.1-conger",
        summary: "alternating-sum formula matches enumerated first-letter descent counts",
        defaults: &[("n_max", 8)],
        run: check_conger,
    },
    CheckDef {
        id: "cor1.2-first-letter",
        summary: "descent and excedance tables coincide up to the first-letter relabeling",
        defaults: &[("n_max", 7)],
        run: check_first_letter_pairing,
    },
    CheckDef {
        id: "thm1.3-equidistribution",
        summary: "phi is a bijection carrying lexc to ldes for arbitrary seeded orders",
        defaults: &[("n", 0), ("d", 0), ("trials", 100), ("seed", 0)],
        run: check_equidistribution,
    },
    CheckDef {
        id: "thm1.4-min-one-crisscross",
        summary: "gamma_min_one carries lexc to ldes and maps classes through s(i, j)",
        defaults: &[("n_max", 5), ("d_max", 3)],
        run: check_min_one_crisscross,
    },
    CheckDef {
        id: "thm1.5-ldes-bexc",
        summary: "gamma_symmetric carries bexc to ldes with the color-swap class map",
        defaults: &[("n_max", 5), ("d2_n_max", 3)],
        run: check_ldes_bexc,
    },
    CheckDef {
        id: "cor1.6-type-b-swap",
        summary: "restricted type B descent and excedance polynomials pair up across signs",
        defaults: &[("n_max", 5)],
        run: check_type_b_swap,
    },
    CheckDef {
        id: "thm1.7-npt-gamma",
        summary: "paired first-letter descent polynomials are palindromic and gamma-positive",
        defaults: &[("n_max", 8)],
        run: check_npt_gamma,
    },
    CheckDef {
        id: "thm1.8-symmetrized-gamma",
        summary: "symmetrized type B polynomials are gamma-positive at their stated centers",
        defaults: &[("n_max", 12)],
        run: check_symmetrized_gamma,
    },
    CheckDef {
        id: "thm1.9-real-rooted",
        summary: "restricted type B polynomials pass the Sturm real-rootedness certificate",
        defaults: &[("n_max", 12)],
        run: check_real_rooted,
    },
    CheckDef {
        id: "thm1.10-carlitz",
        summary: "restricted Carlitz-type series identities hold to the stated depth",
        defaults: &[("n_max", 10), ("terms", 20), ("strict_paper", 0)],
        run: check_carlitz,
    },
    CheckDef {
        id: "cor-brenti",
        summary: "the classical type B Carlitz identity holds to the stated depth",
        defaults: &[("n_max", 6), ("terms", 20)],
        run: check_brenti,
    },
    CheckDef {
        id: "thm4.1-typeb-count-recurrence",
        summary: "coefficient-level type B recurrence agrees with enumeration",
        defaults: &[("n_max", 6), ("coeff_n_max", 8)],
        run: check_typeb_count_recurrence,
    },
    CheckDef {
        id: "prop4.2-typeb-poly-recurrence",
        summary: "polynomial-level type B recurrence and boundary agree with enumeration",
        defaults: &[("n_max", 6)],
        run: check_typeb_poly_recurrence,
    },
    CheckDef {
        id: "lem4.3-drop-first-letter",
        summary: "dropping the first letter assembles level n+1 from level n polynomials",
        defaults: &[("n_plus_1_max", 6)],
        run: check_drop_first_letter,
    },
    CheckDef {
        id: "prop4.4-palindromicity",
        summary: "symmetrized type B polynomials are palindromic at centers n/2 and (n+1)/2",
        defaults: &[("n_max", 12)],
        run: check_palindromicity,
    },
];

fn find_check(id: &str) -> Result<&'static CheckDef> {
    CHECKS
        .iter()
        .find(|def| def.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Every registered check with its default parameters, in registry order.
pub fn list_checks() -> Vec<CheckSpec> {
    CHECKS
        .iter()
        .map(|def| CheckSpec::by_id(def.id).expect("registry ids resolve"))
        .collect()
}

/// One-line summary for a check id.
pub fn check_summary(id: &str) -> Result<&'static str> {
    Ok(find_check(id)?.summary)
}

/// Runs one check. Parameters not named by the check's defaults are
/// rejected before execution.
pub fn run_check(spec: &CheckSpec) -> Result<IdentityReport> {
    let def = find_check(&spec.id)?;
    let mut params: BTreeMap<String, i64> =
        def.defaults.iter().map(|&(k, v)| (k.to_string(), v)).collect();
    for (key, value) in &spec.params {
        if !def.defaults.iter().any(|(k, _)| k == key) {
            return Err(Error::OutOfRange(format!(
                "check {} takes no parameter named {key}",
                spec.id
            )));
        }
        params.insert(key.clone(), *value);
    }
    let start = Instant::now();
    let outcome = (def.run)(&params, spec.bounds)?;
    let status = if outcome.counterexample.is_none() {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    Ok(IdentityReport {
        check: def.id.to_string(),
        params,
        status,
        counterexample: outcome.counterexample,
        examined: outcome.examined,
        wall_ms: start.elapsed().as_millis() as u64,
    })
}

/// Runs the whole registry at default parameters, in registry order.
pub fn run_all(bounds: Bounds) -> Result<Vec<IdentityReport>> {
    list_checks()
        .into_iter()
        .map(|spec| run_check(&spec.with_bounds(bounds)))
        .collect()
}

fn param(params: &BTreeMap<String, i64>, key: &str) -> i64 {
    *params.get(key).expect("defaults populate every key")
}

fn positive_param(params: &BTreeMap<String, i64>, key: &str) -> Result<usize> {
    let v = param(params, key);
    usize::try_from(v).map_err(|_| Error::OutOfRange(format!("parameter {key} = {v} must be nonnegative")))
}

/// Signed first-letter class indices in table order: 1, -1, 2, -2, …
fn signed_indices(n: usize) -> Vec<i64> {
    (1..=n as i64).flat_map(|k| [k, -k]).collect()
}

fn letter_of_signed_index(k: i64) -> Letter {
    Letter::new(k.unsigned_abs() as usize, k.signum() as i32)
}

// ---------------------------------------------------------------------------
// check implementations
// ---------------------------------------------------------------------------

/// The twelve frozen degree-6 polynomials behind `table-n6`.
fn frozen_a6_rows() -> Vec<(usize, IntPoly)> {
    vec![
        (1, IntPoly::from_i64s(&[1, 26, 66, 26, 1])),
        (2, IntPoly::from_i64s(&[0, 16, 66, 36, 2])),
        (3, IntPoly::from_i64s(&[0, 8, 60, 48, 4])),
        (4, IntPoly::from_i64s(&[0, 4, 48, 60, 8])),
        (5, IntPoly::from_i64s(&[0, 2, 36, 66, 16])),
        (6, IntPoly::from_i64s(&[0, 1, 26, 66, 26, 1])),
    ]
}

fn frozen_aexc6_rows() -> Vec<(usize, IntPoly)> {
    vec![
        (1, IntPoly::from_i64s(&[1, 26, 66, 26, 1])),
        (2, IntPoly::from_i64s(&[0, 1, 26, 66, 26, 1])),
        (3, IntPoly::from_i64s(&[0, 2, 36, 66, 16])),
        (4, IntPoly::from_i64s(&[0, 4, 48, 60, 8])),
        (5, IntPoly::from_i64s(&[0, 8, 60, 48, 4])),
        (6, IntPoly::from_i64s(&[0, 16, 66, 36, 2])),
    ]
}

fn check_table_n6(_params: &BTreeMap<String, i64>, bounds: Bounds) -> Result<Outcome> {
    let mut examined = 0u64;
    for (family, frozen) in [
        (TableFamily::A, frozen_a6_rows()),
        (TableFamily::AExc, frozen_aexc6_rows()),
    ] {
        let table = table(family, 6, None, bounds)?;
        examined += 720;
        for ((label, poly), (j, expected)) in table.rows.iter().zip(&frozen) {
            if label != &j.to_string() || poly != expected {
                return Ok(Outcome::fail(
                    examined,
                    format!("{family} row {label}: computed {poly}, expected {expected}"),
                ));
            }
        }
    }
    Ok(Outcome::pass(examined))
}

fn check_conger(params: &BTreeMap<String, i64>, bounds: Bounds) -> Result<Outcome> {
    let n_max = positive_param(params, "n_max")?;
    let mut examined = 0u64;
    for n in 1..=n_max {
        let spec = GroupSpec::unsigned(n, 1)?;
        let rows = stat_polynomial_by_class(spec, StatName::Des, None, bounds.max_elements)?;
        for (letter, enumerated) in rows {
            let j = letter.value;
            let closed = conger_poly(n, j)?;
            examined += n as u64;
            if closed != enumerated {
                return Ok(Outcome::fail(
                    examined,
                    format!("n={n} j={j}: formula gives {closed}, enumeration gives {enumerated}"),
                ));
            }
        }
    }
    Ok(Outcome::pass(examined))
}

fn check_first_letter_pairing(params: &BTreeMap<String, i64>, bounds: Bounds) -> Result<Outcome> {
    let n_max = positive_param(params, "n_max")?;
    let mut examined = 0u64;
    for n in 1..=n_max {
        let spec = GroupSpec::unsigned(n, 1)?;
        let des_rows = stat_polynomial_by_class(spec, StatName::Des, None, bounds.max_elements)?;
        let exc_rows = stat_polynomial_by_class(spec, StatName::Exc, None, bounds.max_elements)?;
        let a = |j: usize| &des_rows[j - 1].1;
        let aexc = |j: usize| &exc_rows[j - 1].1;
        examined += 2 * n as u64;
        let lower = eulerian(n - 1);
        if *a(1) != lower || *aexc(1) != lower {
            return Ok(Outcome::fail(
                examined,
                format!("n={n}: class of 1 gives {} / {} but the order-(n-1) polynomial is {lower}", a(1), aexc(1)),
            ));
        }
        for j in 2..=n {
            if a(j) != aexc(n + 2 - j) {
                return Ok(Outcome::fail(
                    examined,
                    format!("n={n} j={j}: descents {} vs excedances-at-{} {}", a(j), n + 2 - j, aexc(n + 2 - j)),
                ));
            }
        }
    }
    Ok(Outcome::pass(examined))
}

fn check_equidistribution(params: &BTreeMap<String, i64>, bounds: Bounds) -> Result<Outcome> {
    let n = param(params, "n");
    let d = param(params, "d");
    let trials = positive_param(params, "trials")? as u64;
    let seed0 = param(params, "seed") as u64;
    let configs: Vec<(usize, u32)> = if n == 0 || d == 0 {
        vec![(5, 2), (4, 3), (3, 4)]
    } else {
        vec![(n as usize, d as u32)]
    };
    let mut examined = 0u64;
    for (n, d) in configs {
        let spec = GroupSpec::unsigned(n, d)?;
        for trial in 0..trials {
            let seed = seed0 + trial;
            let order = LinearOrder::random(n, d, seed)?;
            let mut seen = HashSet::new();
            for p in enumerate_capped(spec, bounds.max_elements)? {
                examined += 1;
                let image = phi(&p, &order)?;
                if ldes(&image, &order)? != lexc(&p, &order)? {
                    return Ok(Outcome::fail(
                        examined,
                        format!("seed {seed}, n={n} d={d}: ldes(phi(p)) != lexc(p) at p = {p}"),
                    ));
                }
                if !seen.insert((image.values().to_vec(), image.colors().to_vec())) {
                    return Ok(Outcome::fail(
                        examined,
                        format!("seed {seed}, n={n} d={d}: phi image collision at p = {p}"),
                    ));
                }
            }
        }
    }
    Ok(Outcome::pass(examined))
}

fn check_min_one_crisscross(params: &BTreeMap<String, i64>, bounds: Bounds) -> Result<Outcome> {
    let n_max = positive_param(params, "n_max")?;
    let d_max = positive_param(params, "d_max")? as u32;
    let mut examined = 0u64;
    for n in 1..=n_max {
        for d in 1..=d_max {
            let spec = GroupSpec::unsigned(n, d)?;
            let order = LinearOrder::min_one(n, d)?;
            let s = PairMapS::new(n, d);
            let mut seen = HashSet::new();
            for p in enumerate_capped(spec, bounds.max_elements)? {
                examined += 1;
                let image = gamma_min_one(&p)?;
                if ldes(&image, &order)? != lexc(&p, &order)? {
                    return Ok(Outcome::fail(
                        examined,
                        format!("n={n} d={d}: ldes(gamma(p)) != lexc(p) at p = {p}"),
                    ));
                }
                if image.letter(1) != s.apply(p.letter(1)) {
                    return Ok(Outcome::fail(
                        examined,
                        format!("n={n} d={d}: class map broke at p = {p} (image {image})"),
                    ));
                }
                if !seen.insert((image.values().to_vec(), image.colors().to_vec())) {
                    return Ok(Outcome::fail(examined, format!("n={n} d={d}: collision at p = {p}")));
                }
            }
        }
    }
    Ok(Outcome::pass(examined))
}

fn check_ldes_bexc(params: &BTreeMap<String, i64>, bounds: Bounds) -> Result<Outcome> {
    let n_max = positive_param(params, "n_max")?;
    let d2_n_max = positive_param(params, "d2_n_max")?;
    let mut configs: Vec<(usize, u32)> = (1..=n_max).map(|n| (n, 1)).collect();
    configs.extend((1..=d2_n_max).map(|n| (n, 2)));
    let mut examined = 0u64;
    for (n, d) in configs {
        let spec = GroupSpec::signed(n, d)?;
        let order = LinearOrder::symmetric(n, d)?;
        let mut seen = HashSet::new();
        for p in enumerate_capped(spec, bounds.max_elements)? {
            examined += 1;
            let image = gamma_symmetric(&p)?;
            if ldes(&image, &order)? != bexc(&p)? {
                return Ok(Outcome::fail(
                    examined,
                    format!("n={n} d={d}: ldes(gamma(p)) != bexc(p) at p = {p}"),
                ));
            }
            let first = p.letter(1);
            let expected = if first.value == 1 {
                first
            } else {
                Letter::new(first.value, -first.color)
            };
            if image.letter(1) != expected {
                return Ok(Outcome::fail(
                    examined,
                    format!("n={n} d={d}: class map broke at p = {p} (image {image})"),
                ));
            }
            if !seen.insert((image.values().to_vec(), image.colors().to_vec())) {
                return Ok(Outcome::fail(examined, format!("n={n} d={d}: collision at p = {p}")));
            }
        }
    }
    Ok(Outcome::pass(examined))
}

fn check_type_b_swap(params: &BTreeMap<String, i64>, bounds: Bounds) -> Result<Outcome> {
    let n_max = positive_param(params, "n_max")?;
    let mut examined = 0u64;
    for n in 1..=n_max {
        let spec = GroupSpec::new(n, ColorScheme::Signed(1))?;
        let des_rows = stat_polynomial_by_class(spec, StatName::DesB, None, bounds.max_elements)?;
        let exc_rows = stat_polynomial_by_class(spec, StatName::ExcB, None, bounds.max_elements)?;
        let find = |rows: &[(Letter, IntPoly)], k: i64| -> IntPoly {
            let letter = letter_of_signed_index(k);
            rows.iter().find(|(l, _)| *l == letter).expect("class exists").1.clone()
        };
        examined += 4 * n as u64;
        for (b_k, be_k) in [(1i64, 1i64), (-1, -1)] {
            if find(&des_rows, b_k) != find(&exc_rows, be_k) {
                return Ok(Outcome::fail(
                    examined,
                    format!("n={n}: B_(n,{b_k}) != BE_(n,{be_k})"),
                ));
            }
        }
        for k in 2..=n as i64 {
            for (b_k, be_k) in [(k, -k), (-k, k)] {
                if find(&des_rows, b_k) != find(&exc_rows, be_k) {
                    return Ok(Outcome::fail(
                        examined,
                        format!("n={n}: B_(n,{b_k}) != BE_(n,{be_k})"),
                    ));
                }
            }
        }
    }
    Ok(Outcome::pass(examined))
}

fn check_npt_gamma(params: &BTreeMap<String, i64>, _bounds: Bounds) -> Result<Outcome> {
    let n_max = positive_param(params, "n_max")?;
    let mut examined = 0u64;
    for n in 1..=n_max {
        for j in 1..=n {
            examined += 1;
            let pair = &conger_poly(n, j)? + &conger_poly(n, n + 1 - j)?;
            let m = n - 1;
            if !is_palindromic(&pair, m)? {
                return Ok(Outcome::fail(
                    examined,
                    format!("n={n} j={j}: {pair} is not palindromic about {m}/2"),
                ));
            }
            let gv = gamma_vector(&pair, m)?;
            if !gv.is_nonnegative() {
                return Ok(Outcome::fail(
                    examined,
                    format!("n={n} j={j}: negative gamma coefficient in {pair}"),
                ));
            }
        }
    }
    Ok(Outcome::pass(examined))
}

fn check_symmetrized_gamma(params: &BTreeMap<String, i64>, _bounds: Bounds) -> Result<Outcome> {
    let n_max = positive_param(params, "n_max")?;
    // frozen level-2 values anchor the recurrence
    let anchors = [
        (symmetrized_bar(2, 1)?, IntPoly::from_i64s(&[1, 2, 1])),
        (symmetrized_bar(2, 2)?, IntPoly::from_i64s(&[0, 4])),
        (symmetrized_tilde(2, 1)?, IntPoly::from_i64s(&[0, 2, 2])),
        (symmetrized_tilde(2, 2)?, IntPoly::from_i64s(&[0, 2, 2])),
    ];
    let mut examined = 0u64;
    for (got, expected) in anchors {
        examined += 1;
        if got != expected {
            return Ok(Outcome::fail(examined, format!("base case: {got} != {expected}")));
        }
    }
    for n in 1..=n_max {
        for k in 1..=n {
            examined += 2;
            let bar = symmetrized_bar(n, k)?;
            let gv = gamma_vector(&bar, n)?;
            if !gv.is_nonnegative() {
                return Ok(Outcome::fail(
                    examined,
                    format!("bar polynomial n={n} k={k}: negative gamma in {bar}"),
                ));
            }
            let tilde = symmetrized_tilde(n, k)?;
            let gv = gamma_vector(&tilde, n + 1)?;
            if !gv.is_nonnegative() {
                return Ok(Outcome::fail(
                    examined,
                    format!("tilde polynomial n={n} k={k}: negative gamma in {tilde}"),
                ));
            }
        }
    }
    Ok(Outcome::pass(examined))
}

fn check_real_rooted(params: &BTreeMap<String, i64>, _bounds: Bounds) -> Result<Outcome> {
    let n_max = positive_param(params, "n_max")?;
    let mut examined = 0u64;
    for n in 1..=n_max {
        for k in signed_indices(n) {
            examined += 1;
            let poly = typeb_des_poly_rec(n, k)?;
            if !is_real_rooted(&poly)? {
                return Ok(Outcome::fail(
                    examined,
                    format!("n={n} k={k}: Sturm certificate failed for {poly}"),
                ));
            }
        }
    }
    Ok(Outcome::pass(examined))
}

/// Cells where a Carlitz side-by-side comparison disagrees:
/// `(n, i, coefficient index)`. Empty in corrected mode.
pub fn carlitz_mismatches(n_max: usize, terms: usize, as_printed: bool) -> Result<Vec<(usize, i64, usize)>> {
    let mut mismatches = Vec::new();
    for n in 1..=n_max {
        for i in signed_indices(n) {
            let lhs = carlitz_lhs(n, i, terms)?;
            let rhs = if as_printed {
                carlitz_rhs_as_printed(n, i, terms)?
            } else {
                carlitz_rhs(n, i, terms)?
            };
            for k in 0..=terms {
                if lhs.coeff(k) != rhs.coeff(k) {
                    mismatches.push((n, i, k));
                }
            }
        }
    }
    Ok(mismatches)
}

fn check_carlitz(params: &BTreeMap<String, i64>, _bounds: Bounds) -> Result<Outcome> {
    let n_max = positive_param(params, "n_max")?;
    let terms = positive_param(params, "terms")?;
    let as_printed = param(params, "strict_paper") != 0;
    let examined = (1..=n_max).map(|n| 2 * n as u64 * (terms as u64 + 1)).sum();
    let mismatches = carlitz_mismatches(n_max, terms, as_printed)?;
    match mismatches.first() {
        None => Ok(Outcome::pass(examined)),
        Some(&(n, i, k)) => Ok(Outcome::fail(
            examined,
            format!("n={n} i={i}: sides differ at the t^{k} coefficient"),
        )),
    }
}

fn check_brenti(params: &BTreeMap<String, i64>, _bounds: Bounds) -> Result<Outcome> {
    let n_max = positive_param(params, "n_max")?;
    let terms = positive_param(params, "terms")?;
    let mut examined = 0u64;
    for n in 1..=n_max {
        examined += terms as u64 + 1;
        let lhs = brenti_lhs(n, terms)?;
        let rhs = brenti_rhs(n, terms)?;
        if lhs != rhs {
            return Ok(Outcome::fail(examined, format!("n={n}: {lhs:?} != {rhs:?}")));
        }
    }
    Ok(Outcome::pass(examined))
}

fn check_typeb_count_recurrence(params: &BTreeMap<String, i64>, bounds: Bounds) -> Result<Outcome> {
    let n_max = positive_param(params, "n_max")?;
    let coeff_n_max = positive_param(params, "coeff_n_max")?;
    let mut examined = 0u64;
    // enumeration agreement
    for n in 1..=n_max {
        let spec = GroupSpec::new(n, ColorScheme::Signed(1))?;
        let rows = stat_polynomial_by_class(spec, StatName::DesB, None, bounds.max_elements)?;
        for (letter, enumerated) in rows {
            let k = letter.value as i64 * letter.color as i64;
            for dsc in 0..=n {
                examined += 1;
                let counted = typeb_count_rec(n, dsc, k)?;
                if counted != enumerated.coeff(dsc) {
                    return Ok(Outcome::fail(
                        examined,
                        format!(
                            "n={n} dsc={dsc} k={k}: recurrence {counted}, enumeration {}",
                            enumerated.coeff(dsc)
                        ),
                    ));
                }
            }
        }
    }
    // coefficient agreement with the polynomial recurrence
    for n in 1..=coeff_n_max {
        for k in signed_indices(n) {
            let poly = typeb_des_poly_rec(n, k)?;
            for dsc in 0..=n {
                examined += 1;
                if typeb_count_rec(n, dsc, k)? != poly.coeff(dsc) {
                    return Ok(Outcome::fail(
                        examined,
                        format!("n={n} dsc={dsc} k={k}: count and polynomial recurrences disagree"),
                    ));
                }
            }
        }
    }
    Ok(Outcome::pass(examined))
}

fn check_typeb_poly_recurrence(params: &BTreeMap<String, i64>, bounds: Bounds) -> Result<Outcome> {
    let n_max = positive_param(params, "n_max")?;
    let mut examined = 0u64;
    for n in 1..=n_max {
        let spec = GroupSpec::new(n, ColorScheme::Signed(1))?;
        let rows = stat_polynomial_by_class(spec, StatName::DesB, None, bounds.max_elements)?;
        for (letter, enumerated) in rows {
            examined += 1;
            let k = letter.value as i64 * letter.color as i64;
            let by_rec = typeb_des_poly_rec(n, k)?;
            if by_rec != enumerated {
                return Ok(Outcome::fail(
                    examined,
                    format!("n={n} k={k}: recurrence {by_rec}, enumeration {enumerated}"),
                ));
            }
        }
        // boundary classes carry 2^(n-1) t times the order-(n-1) polynomial
        if n >= 2 {
            let boundary = eulerian(n - 1)
                .scalar_mul(&(BigInt::from(1) << (n - 1)))
                .mul_tpow(1);
            for k in [n as i64, -(n as i64)] {
                examined += 1;
                if typeb_des_poly_rec(n, k)? != boundary {
                    return Ok(Outcome::fail(examined, format!("boundary n={n} k={k} mismatch")));
                }
            }
        }
    }
    Ok(Outcome::pass(examined))
}

fn check_drop_first_letter(params: &BTreeMap<String, i64>, bounds: Bounds) -> Result<Outcome> {
    let n_plus_1_max = positive_param(params, "n_plus_1_max")?;
    let mut examined = 0u64;
    for level in 2..=n_plus_1_max {
        let spec = GroupSpec::new(level, ColorScheme::Signed(1))?;
        let rows = stat_polynomial_by_class(spec, StatName::DesB, None, bounds.max_elements)?;
        for (letter, enumerated) in rows {
            examined += 1;
            let k = letter.value as i64 * letter.color as i64;
            let assembled = lemma_drop_rhs(level, k)?;
            if assembled != enumerated {
                return Ok(Outcome::fail(
                    examined,
                    format!("level {level} k={k}: assembled {assembled}, enumeration {enumerated}"),
                ));
            }
            if assembled != typeb_des_poly_rec(level, k)? {
                return Ok(Outcome::fail(
                    examined,
                    format!("level {level} k={k}: assembled side disagrees with the recurrence"),
                ));
            }
        }
    }
    Ok(Outcome::pass(examined))
}

fn check_palindromicity(params: &BTreeMap<String, i64>, _bounds: Bounds) -> Result<Outcome> {
    let n_max = positive_param(params, "n_max")?;
    let mut examined = 0u64;
    for n in 1..=n_max {
        for k in 1..=n {
            examined += 2;
            let bar = symmetrized_bar(n, k)?;
            if !is_palindromic(&bar, n)? {
                return Ok(Outcome::fail(examined, format!("bar n={n} k={k}: {bar} not palindromic")));
            }
            let tilde = symmetrized_tilde(n, k)?;
            if !is_palindromic(&tilde, n + 1)? {
                return Ok(Outcome::fail(examined, format!("tilde n={n} k={k}: {tilde} not palindromic")));
            }
        }
    }
    Ok(Outcome::pass(examined))
}

// ---------------------------------------------------------------------------
// tables
// ---------------------------------------------------------------------------

/// Families the table emitter understands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFamily {
    /// Descents over classical permutations by first letter.
    A,
    /// Excedances over classical permutations by first letter.
    AExc,
    /// Type B descents over signed permutations by first letter.
    B,
    /// Type B excedances over signed permutations by first letter.
    BE,
    /// Order-relative descents under the min-one order, by first letter,
    /// over an unsigned colored group (requires `d`).
    ColoredLdes,
    /// Order-relative excedances under the min-one order (requires `d`).
    ColoredLexc,
}

impl fmt::Display for TableFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            TableFamily::A => "A",
            TableFamily::AExc => "AExc",
            TableFamily::B => "B",
            TableFamily::BE => "BE",
            TableFamily::ColoredLdes => "colored-ldes",
            TableFamily::ColoredLexc => "colored-lexc",
        };
        write!(f, "{name}")
    }
}

impl FromStr for TableFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" => Ok(TableFamily::A),
            "AExc" => Ok(TableFamily::AExc),
            "B" => Ok(TableFamily::B),
            "BE" => Ok(TableFamily::BE),
            "colored-ldes" => Ok(TableFamily::ColoredLdes),
            "colored-lexc" => Ok(TableFamily::ColoredLexc),
            other => Err(Error::OutOfRange(format!("unknown table family: {other}"))),
        }
    }
}

/// Output format shared by the table emitter and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Tsv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "tsv" => Ok(OutputFormat::Tsv),
            other => Err(Error::OutOfRange(format!("unknown format: {other}"))),
        }
    }
}

/// One polynomial row per first-letter class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub family: TableFamily,
    pub n: usize,
    pub d: Option<u32>,
    pub rows: Vec<(String, IntPoly)>,
}

impl Table {
    pub fn to_json(&self) -> String {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|(label, poly)| {
                serde_json::json!({
                    "class": label,
                    "coeffs": poly.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        let mut value = serde_json::json!({
            "family": self.family.to_string(),
            "n": self.n,
            "rows": rows,
        });
        if let Some(d) = self.d {
            value["d"] = serde_json::json!(d);
        }
        value.to_string()
    }

    /// One `class <TAB> comma-joined coefficients` line per row.
    pub fn to_tsv(&self) -> String {
        self.rows
            .iter()
            .map(|(label, poly)| {
                let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
                format!("{label}\t{}", coeffs.join(","))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Builds the distribution table of a family, one enumeration pass.
pub fn table(family: TableFamily, n: usize, d: Option<u32>, bounds: Bounds) -> Result<Table> {
    let cap = bounds.max_elements;
    let rows = match family {
        TableFamily::A | TableFamily::AExc => {
            let spec = GroupSpec::unsigned(n, 1)?;
            let stat = if family == TableFamily::A { StatName::Des } else { StatName::Exc };
            stat_polynomial_by_class(spec, stat, None, cap)?
                .into_iter()
                .map(|(letter, poly)| (letter.value.to_string(), poly))
                .collect()
        }
        TableFamily::B | TableFamily::BE => {
            let spec = GroupSpec::signed(n, 1)?;
            let stat = if family == TableFamily::B { StatName::DesB } else { StatName::ExcB };
            let by_class = stat_polynomial_by_class(spec, stat, None, cap)?;
            let mut rows = Vec::with_capacity(2 * n);
            for k in signed_indices(n) {
                let letter = letter_of_signed_index(k);
                let poly = by_class
                    .iter()
                    .find(|(l, _)| *l == letter)
                    .expect("class exists")
                    .1
                    .clone();
                rows.push((k.to_string(), poly));
            }
            rows
        }
        TableFamily::ColoredLdes | TableFamily::ColoredLexc => {
            let d = d.ok_or_else(|| {
                Error::OutOfRange("colored tables need the color parameter d".into())
            })?;
            let spec = GroupSpec::unsigned(n, d)?;
            let order = LinearOrder::min_one(n, d)?;
            let stat = if family == TableFamily::ColoredLdes { StatName::Ldes } else { StatName::Lexc };
            stat_polynomial_by_class(spec, stat, Some(&order), cap)?
                .into_iter()
                .map(|(letter, poly)| (format!("{}.{}", letter.value, letter.color), poly))
                .collect()
        }
    };
    let d = match family {
        TableFamily::ColoredLdes | TableFamily::ColoredLexc => d,
        _ => None,
    };
    Ok(Table { family, n, d, rows })
}

/// Formats [`table`] as JSON or TSV.
pub fn emit_table(
    family: TableFamily,
    n: usize,
    d: Option<u32>,
    format: OutputFormat,
    bounds: Bounds,
) -> Result<String> {
    let table = table(family, n, d, bounds)?;
    Ok(match format {
        OutputFormat::Json => table.to_json(),
        OutputFormat::Tsv => table.to_tsv(),
    })
}
