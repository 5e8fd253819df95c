//! Verification harness: oracle-vs-detector sweeps, the identity suite,
//! catalog errata, and exhaustive permutation/planarity checks.
//!
//! Every report here is a plain value; rendering lives in [`crate::report`].

use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{CatalogItem, CatalogParams};
use crate::classify::{classify, is_do, RuleId};
use crate::dickson::{
    closed_form_exact, construct, eval_reversed_dickson, first_kind_closed, generate_by_recurrence,
    DicksonKind,
};
use crate::error::{Error, Result};
use crate::field::{validate_odd_prime, FieldParams};
use crate::poly::SparsePoly;

/// Largest field order the exhaustive map checks accept by default.
pub const DEFAULT_FIELD_CAP: u64 = 2401;

/// Primes the catalog errata scan instantiates for items stated for a range
/// of characteristics.
pub const CATALOG_PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Mismatch {
    pub n: u64,
    pub d: u64,
    pub oracle: bool,
    pub detector: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DoInstance {
    pub n: u64,
    pub d: u64,
    pub rule_id: Option<RuleId>,
    pub polynomial: String,
}

/// A printed catalog coefficient that differs from the constructed one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErratumDiff {
    pub item: CatalogItem,
    pub params: CatalogParams,
    pub label: String,
    pub exponent: u64,
    pub printed_term: String,
    pub computed_term: String,
    /// Coefficient from exact integer arithmetic, reduced mod p.
    pub exact_coeff: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub kind: DicksonKind,
    pub p: u64,
    pub n_range: [u64; 2],
    pub d_range: [u64; 2],
    /// Cells satisfying the kind's side conditions, including skipped ones.
    pub total_checked: u64,
    /// Cells whose construction overflowed 64-bit exponents.
    pub skipped_overflow: u64,
    pub mismatches: Vec<Mismatch>,
    pub do_instances: Vec<DoInstance>,
    pub errata_diffs: Vec<ErratumDiff>,
    /// Wall-clock seconds; `None` when timing is suppressed.
    pub runtime: Option<f64>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Cells of a sweep in iteration order (n ascending, then d). The first kind
/// keeps `gcd(n, p) = 1`; both kinds keep `gcd(d, p) = 1`.
pub fn sweep_cells(kind: DicksonKind, p: u64, n_max: u64, d_max: u64) -> Vec<(u64, u64)> {
    (2..=n_max)
        .filter(|n| kind == DicksonKind::Second || n % p != 0)
        .flat_map(|n| (1..=d_max).filter(|d| d % p != 0).map(move |d| (n, d)))
        .collect()
}

enum CellOutcome {
    Overflow,
    Checked {
        oracle: bool,
        detector: bool,
        rule: Option<RuleId>,
        poly: SparsePoly,
    },
}

fn check_cell(kind: DicksonKind, p: u64, n: u64, d: u64) -> Result<CellOutcome> {
    let oracle = classify(kind, p, n, d)?;
    let poly = match construct(kind, n, d, p) {
        Ok(f) => f,
        Err(Error::ExponentOverflow) => return Ok(CellOutcome::Overflow),
        Err(e) => return Err(e),
    };
    let detector = is_do(&poly)?.is_do;
    Ok(CellOutcome::Checked {
        oracle: oracle.matched,
        detector,
        rule: oracle.rule_id,
        poly,
    })
}

/// Compares the rule oracle with DO detection on every cell.
///
/// `jobs > 1` evaluates cells on a rayon pool; results are merged in cell
/// order either way, so the report does not depend on `jobs`.
pub fn sweep(
    kind: DicksonKind,
    p: u64,
    n_max: u64,
    d_max: u64,
    jobs: usize,
) -> Result<SweepReport> {
    validate_odd_prime(p)?;
    if n_max < 2 || d_max < 1 {
        return Err(Error::InvalidArgument(
            "sweep needs n_max >= 2 and d_max >= 1".into(),
        ));
    }
    let start = Instant::now();
    let cells = sweep_cells(kind, p, n_max, d_max);
    let outcomes: Vec<Result<CellOutcome>> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?;
        pool.install(|| {
            cells
                .par_iter()
                .map(|&(n, d)| check_cell(kind, p, n, d))
                .collect()
        })
    } else {
        cells
            .iter()
            .map(|&(n, d)| check_cell(kind, p, n, d))
            .collect()
    };

    let mut report = SweepReport {
        kind,
        p,
        n_range: [2, n_max],
        d_range: [1, d_max],
        total_checked: cells.len() as u64,
        skipped_overflow: 0,
        mismatches: Vec::new(),
        do_instances: Vec::new(),
        errata_diffs: Vec::new(),
        runtime: None,
    };
    for (&(n, d), outcome) in cells.iter().zip(outcomes) {
        match outcome? {
            CellOutcome::Overflow => report.skipped_overflow += 1,
            CellOutcome::Checked {
                oracle,
                detector,
                rule,
                poly,
            } => {
                if oracle != detector {
                    report.mismatches.push(Mismatch {
                        n,
                        d,
                        oracle,
                        detector,
                    });
                }
                if detector {
                    report.do_instances.push(DoInstance {
                        n,
                        d,
                        rule_id: rule,
                        polynomial: poly.to_string(),
                    });
                }
            }
        }
    }
    let items: Vec<_> = CatalogItem::all()
        .into_iter()
        .filter(|it| it.kind() == kind && it.admits(p))
        .collect();
    report.errata_diffs = catalog_errata(&items, &[p], 2)?;
    report.runtime = Some(start.elapsed().as_secs_f64());
    Ok(report)
}

fn parameter_grid(item: CatalogItem, p: u64, max: u32) -> Vec<CatalogParams> {
    let names = item.parameter_names();
    let mut grid = vec![CatalogParams {
        p: Some(p),
        ..Default::default()
    }];
    for name in names {
        grid = grid
            .into_iter()
            .flat_map(|base| {
                (0..=max).map(move |v| {
                    let mut next = base;
                    match *name {
                        "i" => next.i = v,
                        "k" => next.k = v,
                        "l" => next.l = v,
                        _ => next.m = v,
                    }
                    next
                })
            })
            .collect();
    }
    grid
}

/// Compares each printed catalog polynomial with the constructed one, over
/// every parameter in `0..=max` and every admitted prime in `primes`.
pub fn catalog_errata(items: &[CatalogItem], primes: &[u64], max: u32) -> Result<Vec<ErratumDiff>> {
    let mut diffs = Vec::new();
    for &item in items {
        for &p in primes.iter().filter(|&&p| item.admits(p)) {
            for params in parameter_grid(item, p, max) {
                diffs.extend(item_errata(item, &params)?);
            }
        }
    }
    Ok(diffs)
}

/// Differences between one printed item and its construction.
pub fn item_errata(item: CatalogItem, params: &CatalogParams) -> Result<Vec<ErratumDiff>> {
    let (p, n, d) = item.instance(params)?;
    let printed = item.printed_terms(params)?;
    let expected = crate::catalog::printed_poly(item, params)?;
    let computed = construct(item.kind(), n, d, p)?;
    let exact = closed_form_exact(item.kind(), n, d, p)?;
    let diffs = expected
        .diff_terms(&computed)
        .into_iter()
        .map(|(exponent, printed_coeff, computed_coeff)| {
            let label = printed.iter().find(|t| t.exponent == exponent).map_or_else(
                || format!("x^{exponent} (unprinted)"),
                |t| t.label.to_string(),
            );
            ErratumDiff {
                item,
                params: *params,
                label,
                exponent,
                printed_term: format!("{printed_coeff}*x^{exponent}"),
                computed_term: format!("{computed_coeff}*x^{exponent}"),
                exact_coeff: exact.coeff(exponent),
            }
        })
        .collect();
    Ok(diffs)
}

/// Outcome of one named identity check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub cases: u64,
    /// First failing case.
    pub counterexample: Option<String>,
    /// Informational detail for passing checks (e.g. a found witness).
    pub note: Option<String>,
}

impl CheckOutcome {
    fn new(name: &str) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed: true,
            cases: 0,
            counterexample: None,
            note: None,
        }
    }

    fn fail(&mut self, detail: String) {
        if self.passed {
            self.passed = false;
            self.counterexample = Some(detail);
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(detail());
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub p: u64,
    pub n_max: u64,
    pub fields: Vec<String>,
    pub checks: Vec<CheckOutcome>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Closed form equals the recurrence for both kinds, `n <= n_max`, each `d`.
pub fn check_dual_path(p: u64, n_max: u64, ds: &[u64]) -> CheckOutcome {
    let mut out = CheckOutcome::new("dual-path construction");
    for kind in DicksonKind::ALL {
        for &d in ds {
            let seq = match generate_by_recurrence(kind, n_max, p, d) {
                Ok(seq) => seq,
                Err(e) => {
                    out.fail(format!("{kind} d={d}: {e}"));
                    continue;
                }
            };
            for (n, rec) in seq.iter().enumerate() {
                let n = n as u64;
                match construct(kind, n, d, p) {
                    Ok(closed) => out.record(&closed == rec, || {
                        format!("{kind} n={n} d={d}: closed {closed} vs recurrence {rec}")
                    }),
                    Err(e) => out.fail(format!("{kind} n={n} d={d}: {e}")),
                }
            }
        }
    }
    out
}

/// Lucas-based coefficients equal exact integer coefficients mod p.
pub fn check_exact_integer(p: u64, n_max: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new("exact-integer coefficients");
    for kind in DicksonKind::ALL {
        for n in 0..=n_max {
            match (construct(kind, n, 1, p), closed_form_exact(kind, n, 1, p)) {
                (Ok(lucas), Ok(exact)) => out.record(lucas == exact, || {
                    format!("{kind} n={n}: lucas {lucas} vs exact {exact}")
                }),
                (Err(e), _) | (_, Err(e)) => out.fail(format!("{kind} n={n}: {e}")),
            }
        }
    }
    out
}

/// First kind: the polynomial for `n p` is the p-th power of the one for `n`
/// (`d = 1`, `n` coprime to p).
pub fn check_frobenius_index(p: u64, n_max: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new("frobenius index (first kind)");
    for n in (0..=n_max).filter(|n| n % p != 0) {
        let lhs = n
            .checked_mul(p)
            .ok_or(Error::ExponentOverflow)
            .and_then(|np| first_kind_closed(np, 1, p));
        let rhs = first_kind_closed(n, 1, p).and_then(|f| f.pow_p());
        match (lhs, rhs) {
            (Ok(a), Ok(b)) => out.record(a == b, || format!("n={n}: {a} vs {b}")),
            (Err(e), _) | (_, Err(e)) => out.fail(format!("n={n}: {e}")),
        }
    }
    out
}

/// Both kinds: substituting `x^(p d)` equals the p-th power of substituting `x^d`.
pub fn check_frobenius_substitution(p: u64, n_max: u64, ds: &[u64]) -> CheckOutcome {
    let mut out = CheckOutcome::new("frobenius substitution");
    for kind in DicksonKind::ALL {
        for &d in ds {
            for n in 0..=n_max {
                let lhs = construct(kind, n, d * p, p);
                let rhs = construct(kind, n, d, p).and_then(|f| f.pow_p());
                match (lhs, rhs) {
                    (Ok(a), Ok(b)) => {
                        out.record(a == b, || format!("{kind} n={n} d={d}: {a} vs {b}"))
                    }
                    (Err(e), _) | (_, Err(e)) => out.fail(format!("{kind} n={n} d={d}: {e}")),
                }
            }
        }
    }
    out
}

/// The least `n >= 2` with `E_{np} != E_n^p`, as `(n, E_{np}, E_n^p)`.
pub fn second_kind_non_identity(p: u64, n_limit: u64) -> Option<(u64, SparsePoly, SparsePoly)> {
    (2..=n_limit).find_map(|n| {
        let lhs = construct(DicksonKind::Second, n * p, 1, p).ok()?;
        let rhs = construct(DicksonKind::Second, n, 1, p).ok()?.pow_p().ok()?;
        (lhs != rhs).then_some((n, lhs, rhs))
    })
}

pub fn check_second_kind_non_identity(p: u64, n_limit: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new("second-kind index non-identity");
    out.cases = 1;
    match second_kind_non_identity(p, n_limit) {
        Some((n, lhs, rhs)) => {
            out.note = Some(format!("witness n={n}: E_(np) = {lhs}, E_n^p = {rhs}"));
        }
        None => out.fail(format!("no witness for n <= {n_limit}")),
    }
    out
}

/// `F_n(a, c) = a^n F_n(1, c / a^2)` for both kinds, every `a != 0`, every
/// `c` and every `n <= n_max`.
pub fn check_scaling(field: &FieldParams, n_max: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new(&format!("scaling identity over {field}"));
    let one = field.one();
    for a in field.elements().skip(1) {
        let inv_a2 = field.inv(&field.mul(&a, &a)).expect("a is nonzero");
        for c in field.elements() {
            let scaled = field.mul(&c, &inv_a2);
            for kind in DicksonKind::ALL {
                for n in 0..=n_max {
                    let lhs = eval_reversed_dickson(kind, n, &a, &c, field);
                    let base = eval_reversed_dickson(kind, n, &one, &scaled, field);
                    let rhs = field.mul(&field.pow(&a, n), &base);
                    out.record(lhs == rhs, || {
                        format!("{kind} n={n} a={a} c={c}: {lhs} vs {rhs}")
                    });
                }
            }
        }
    }
    out
}

/// Runs every identity family for characteristic `p`.
pub fn identity_suite(p: u64, n_max: u64, fields: &[FieldParams]) -> Result<IdentityReport> {
    validate_odd_prime(p)?;
    if let Some(f) = fields.iter().find(|f| f.p() != p) {
        return Err(Error::MixedCharacteristic(p, f.p()));
    }
    let mut checks = vec![
        check_dual_path(p, n_max, &[1, 2, 3, 4, 5]),
        check_exact_integer(p, n_max),
        check_frobenius_index(p, n_max),
        check_frobenius_substitution(p, n_max, &[1, 2]),
        check_second_kind_non_identity(p, 10),
    ];
    checks.extend(fields.iter().map(|f| check_scaling(f, n_max)));
    Ok(IdentityReport {
        p,
        n_max,
        fields: fields.iter().map(|f| f.to_string()).collect(),
        checks,
    })
}

fn value_table(f: &SparsePoly, field: &FieldParams, cap: u64) -> Result<Vec<u64>> {
    if field.q() > cap {
        return Err(Error::FieldTooLarge { q: field.q(), cap });
    }
    field
        .elements()
        .map(|x| f.evaluate(field, &x).map(|v| field.index(&v)))
        .collect()
}

fn is_bijective(values: impl Iterator<Item = u64>, q: u64) -> bool {
    let mut seen = vec![false; q as usize];
    for v in values {
        if std::mem::replace(&mut seen[v as usize], true) {
            return false;
        }
    }
    true
}

pub fn is_permutation_map(f: &SparsePoly, field: &FieldParams) -> Result<bool> {
    is_permutation_map_capped(f, field, DEFAULT_FIELD_CAP)
}

pub fn is_permutation_map_capped(f: &SparsePoly, field: &FieldParams, cap: u64) -> Result<bool> {
    let table = value_table(f, field, cap)?;
    Ok(is_bijective(table.into_iter(), field.q()))
}

pub fn is_planar_map(g: &SparsePoly, field: &FieldParams) -> Result<bool> {
    is_planar_map_capped(g, field, DEFAULT_FIELD_CAP)
}

/// `x -> g(x + a) - g(x)` is a bijection for every nonzero `a`.
pub fn is_planar_map_capped(g: &SparsePoly, field: &FieldParams, cap: u64) -> Result<bool> {
    let table = value_table(g, field, cap)?;
    let q = field.q();
    Ok((1..q).all(|a| {
        is_bijective(
            (0..q)
                .map(|x| field.sub_index(table[field.add_index(x, a) as usize], table[x as usize])),
            q,
        )
    }))
}

/// Values of `x -> g(x + a) - g(x)`, indexed by the index of `x`.
pub fn difference_map(g: &SparsePoly, field: &FieldParams, a: u64) -> Result<Vec<u64>> {
    let table = value_table(g, field, DEFAULT_FIELD_CAP)?;
    Ok((0..field.q())
        .map(|x| field.sub_index(table[field.add_index(x, a) as usize], table[x as usize]))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub n: u64,
    pub d: u64,
    pub q: u64,
    pub is_do: bool,
    pub is_planar: bool,
    pub is_permutation: bool,
}

/// Planarity and permutation behaviour of every oracle-DO instance over
/// each GF(p^e), `e` in `e_list`. Observational only.
pub fn planarity_survey(
    kind: DicksonKind,
    p: u64,
    e_list: &[u32],
    n_max: u64,
    d_max: u64,
) -> Result<Vec<SurveyRow>> {
    validate_odd_prime(p)?;
    let fields = e_list
        .iter()
        .map(|&e| FieldParams::new(p, e))
        .collect::<Result<Vec<_>>>()?;
    if let Some(f) = fields.iter().find(|f| f.q() > DEFAULT_FIELD_CAP) {
        return Err(Error::FieldTooLarge {
            q: f.q(),
            cap: DEFAULT_FIELD_CAP,
        });
    }
    let mut rows = Vec::new();
    for (n, d) in sweep_cells(kind, p, n_max, d_max) {
        if !classify(kind, p, n, d)?.matched {
            continue;
        }
        let poly = construct(kind, n, d, p)?;
        let detected = is_do(&poly)?.is_do;
        for field in &fields {
            rows.push(SurveyRow {
                n,
                d,
                q: field.q(),
                is_do: detected,
                is_planar: is_planar_map(&poly, field)?,
                is_permutation: is_permutation_map(&poly, field)?,
            });
        }
    }
    Ok(rows)
}

/// Distinct `(item, term label)` pairs among errata.
pub fn distinct_errata(diffs: &[ErratumDiff]) -> Vec<(CatalogItem, String)> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for diff in diffs {
        let key = (diff.item, diff.label.clone());
        if seen.insert(key.clone()) {
            out.push(key);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u64, terms: &[(u64, u64)]) -> SparsePoly {
        SparsePoly::from_terms(p, terms.iter().copied())
    }

    #[test]
    fn small_sweep_counts() {
        let r = sweep(DicksonKind::First, 3, 2, 2, 1).unwrap();
        assert_eq!(r.total_checked, 2);
        assert!(r.passed());
        let inst: Vec<_> = r
            .do_instances
            .iter()
            .map(|i| (i.n, i.d, i.rule_id))
            .collect();
        assert!(inst.contains(&(2, 2, Some(RuleId::FirstI))));
    }

    #[test]
    fn sweep_side_conditions() {
        assert!(sweep_cells(DicksonKind::First, 3, 12, 6)
            .iter()
            .all(|(n, d)| n % 3 != 0 && d % 3 != 0));
        assert!(sweep_cells(DicksonKind::Second, 3, 12, 6)
            .iter()
            .any(|(n, _)| n % 3 == 0));
        assert!(sweep(DicksonKind::First, 3, 1, 2, 1).is_err());
        assert_eq!(
            sweep(DicksonKind::First, 2, 5, 2, 1).unwrap_err(),
            Error::EvenPrime
        );
    }

    #[test]
    fn desk_sweeps_have_no_mismatches() {
        let r = sweep(DicksonKind::First, 3, 30, 10, 1).unwrap();
        assert!(r.mismatches.is_empty());
        let r = sweep(DicksonKind::Second, 7, 30, 10, 1).unwrap();
        assert!(r.mismatches.is_empty());
        assert!(r.do_instances.iter().all(|i| i.n == 2 || i.n == 3));
        assert!(!r.do_instances.is_empty());
    }

    #[test]
    fn parallel_sweep_is_identical() {
        let mut a = sweep(DicksonKind::Second, 3, 40, 12, 1).unwrap();
        let mut b = sweep(DicksonKind::Second, 3, 40, 12, 4).unwrap();
        a.runtime = None;
        b.runtime = None;
        assert_eq!(a, b);
    }

    #[test]
    fn permutation_examples() {
        let f5 = FieldParams::prime_field(5).unwrap();
        let f7 = FieldParams::prime_field(7).unwrap();
        assert!(is_permutation_map(&poly(5, &[(3, 1)]), &f5).unwrap());
        assert!(!is_permutation_map(&poly(7, &[(2, 1)]), &f7).unwrap());
        let gf9 = FieldParams::new(3, 2).unwrap();
        assert!(is_permutation_map(&poly(3, &[(1, 1)]), &gf9).unwrap());
        let big = FieldParams::new(7, 5).unwrap();
        assert_eq!(
            is_permutation_map(&poly(7, &[(1, 1)]), &big),
            Err(Error::FieldTooLarge {
                q: 16807,
                cap: DEFAULT_FIELD_CAP
            })
        );
    }

    #[test]
    fn planarity_examples() {
        let gf9 = FieldParams::new(3, 2).unwrap();
        assert!(is_planar_map(&poly(3, &[(2, 1)]), &gf9).unwrap());
        let f5 = FieldParams::prime_field(5).unwrap();
        assert!(!is_planar_map(&poly(5, &[(1, 1)]), &f5).unwrap());
        let gf27 = FieldParams::new(3, 3).unwrap();
        assert!(is_planar_map(&poly(3, &[(4, 1)]), &gf27).unwrap());
        assert!(is_planar_map(&poly(5, &[(2, 3)]), &f5).unwrap());
        assert!(!is_planar_map(&poly(3, &[(3, 1)]), &gf9).unwrap());
    }

    #[test]
    fn planar_implies_bijective_difference_maps() {
        let gf27 = FieldParams::new(3, 3).unwrap();
        let g = poly(3, &[(4, 1)]);
        assert!(is_planar_map(&g, &gf27).unwrap());
        for a in [1, 5, 26] {
            let map = difference_map(&g, &gf27, a).unwrap();
            let distinct: HashSet<_> = map.iter().collect();
            assert_eq!(distinct.len(), 27);
        }
    }

    #[test]
    fn survey_contains_square_over_gf9() {
        let rows = planarity_survey(DicksonKind::First, 3, &[1, 2], 10, 4).unwrap();
        assert!(rows.contains(&SurveyRow {
            n: 2,
            d: 2,
            q: 9,
            is_do: true,
            is_planar: true,
            is_permutation: false
        }));
        assert!(rows
            .iter()
            .all(|r| classify(DicksonKind::First, 3, r.n, r.d).unwrap().matched));
        let rows = planarity_survey(DicksonKind::First, 5, &[1], 2, 2).unwrap();
        assert_eq!(
            rows,
            vec![SurveyRow {
                n: 2,
                d: 2,
                q: 5,
                is_do: true,
                is_planar: true,
                is_permutation: false
            }]
        );
    }

    #[test]
    fn identity_suite_small() {
        let fields = [
            FieldParams::new(3, 2).unwrap(),
            FieldParams::new(3, 3).unwrap(),
        ];
        let report = identity_suite(3, 50, &fields).unwrap();
        assert!(report.passed(), "{report:#?}");
        assert_eq!(report.checks.len(), 7);
        let witness = second_kind_non_identity(3, 10).unwrap();
        assert_eq!(witness.0, 2);
        assert_eq!(witness.1.to_string(), "1*x^1 + 2*x^3");
        assert_eq!(witness.2.to_string(), "2*x^3");
        let f5 = FieldParams::prime_field(5).unwrap();
        assert!(identity_suite(3, 5, &[f5]).is_err());
    }

    #[test]
    fn scaling_at_unit_is_trivial() {
        let gf9 = FieldParams::new(3, 2).unwrap();
        let one = gf9.one();
        for c in gf9.elements() {
            for n in 0..20 {
                for kind in DicksonKind::ALL {
                    let lhs = eval_reversed_dickson(kind, n, &one, &c, &gf9);
                    let rhs = eval_reversed_dickson(
                        kind,
                        n,
                        &one,
                        &gf9.mul(&c, &gf9.inv(&one).unwrap()),
                        &gf9,
                    );
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn errata_are_the_two_known_items() {
        let diffs = catalog_errata(&CatalogItem::all(), &CATALOG_PRIMES, 2).unwrap();
        let distinct = distinct_errata(&diffs);
        let names: Vec<_> = distinct.iter().map(|(i, l)| format!("{i} {l}")).collect();
        assert_eq!(names, vec!["R1-4 x^(6p^(l+m))", "R2-9 x^(4p^(k+1))"]);
        for diff in &diffs {
            assert_eq!(
                diff.computed_term,
                format!("{}*x^{}", diff.exact_coeff, diff.exponent)
            );
            assert!(diff.printed_term.starts_with("1*"));
            assert!(diff.computed_term.starts_with("2*"));
        }
    }
}
