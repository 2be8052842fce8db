use std::collections::BTreeMap;

use motivic_core::combinatorics::partitions_of;
use motivic_core::ff_oracle::{
    count_commuting_pairs, count_commuting_pairs_by_type, count_cyclic_pairs, is_prime, EnumOptions,
};
use motivic_core::formulas::{
    c_alpha_class, commuting_series_product, cyclic_class, cyclic_series, default_cyclic_depth, euler_q_sides,
    euler_sides, feit_fine_class, feit_fine_pipeline, min_feit_fine_depth, partition_series,
    two_variable_partition_identity, ProductMode,
};
use motivic_core::power::{check_axioms, lefschetz_rule, random_instance};
use motivic_core::series::{render_monomial, SeriesComparison};
use motivic_core::{FormulaError, LaurentPolynomial, MultiSeries, OracleError, SeriesError, Specialization};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::args::{ClassArgs, SeriesArgs, Theorem, VerifyArgs};
use crate::report::{ReportBuilder, Target, VerifyReport};
use crate::CliError;

/// Smallest depth accepted anywhere.
pub const MIN_DEPTH: u32 = 8;

/// Largest order of the Jordan-variable identity check.
pub const JORDAN_IDENTITY_ORDER: u32 = 6;

/// Depth used for a series or identity of total degree `order` when none is
/// given: enough to certify every class up to that degree.
pub fn default_depth(order: u32) -> u32 {
    min_feit_fine_depth(order)
}

fn formula_error(e: FormulaError) -> CliError {
    match e {
        FormulaError::DepthTooSmall { .. } | FormulaError::InvalidDims(_) => CliError::Usage(e.to_string()),
        _ => CliError::Failure(e.to_string()),
    }
}

fn series_error(e: SeriesError) -> CliError {
    CliError::Failure(e.to_string())
}

fn oracle_error(e: OracleError) -> CliError {
    match e {
        OracleError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
        OracleError::NotPrime(_) | OracleError::Shape(_) => CliError::Usage(e.to_string()),
        OracleError::ThreadPool(_) => CliError::Failure(e.to_string()),
    }
}

fn to_json(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

#[derive(Serialize)]
struct SeriesOutput<'a> {
    theorem: &'a str,
    order: u32,
    depth: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
    series: &'a MultiSeries,
}

pub fn series(args: &SeriesArgs) -> Result<String, CliError> {
    let depth = args.depth.unwrap_or_else(|| default_depth(args.order));
    if depth < MIN_DEPTH {
        return Err(CliError::Usage(format!("--depth must be at least {MIN_DEPTH}")));
    }
    if (args.theorem == Theorem::Cyclic) != args.r.is_some() {
        return Err(CliError::Usage("--r is required for, and only for, --theorem cyclic".into()));
    }
    let n = args.order;
    let s = match args.theorem {
        Theorem::FeitFine => feit_fine_pipeline(n, depth),
        Theorem::Jordan => commuting_series_product(n, ProductMode::JordanVariables, depth),
        Theorem::Euler => euler_sides(n, depth).0,
        Theorem::Cyclic => match args.r {
            Some(r) if r > 0 => cyclic_series(r, n, depth),
            _ => return Err(CliError::Usage("--r must be positive".into())),
        },
    };
    if args.json {
        let theorem = clap::ValueEnum::to_possible_value(&args.theorem).expect("no skipped variants");
        let out = SeriesOutput { theorem: theorem.get_name(), order: n, depth, r: args.r, series: &s };
        return Ok(to_json(&out));
    }
    Ok(if args.windows { s.render_with_windows() } else { s.render() })
}

#[derive(Serialize)]
struct ClassOutput {
    target: String,
    depth: u32,
    class: String,
    terms: Vec<TermOutput>,
}

#[derive(Serialize)]
struct TermOutput {
    exp: i64,
    coeff: String,
}

pub fn class(args: &ClassArgs) -> Result<String, CliError> {
    let size = if let Some(n) = args.cn {
        n
    } else if let Some(alpha) = &args.calpha {
        alpha.size()
    } else {
        args.dims.as_ref().map_or(0, |v| v.total())
    };
    if size > args.max_size {
        return Err(CliError::Usage(format!("size {size} exceeds --max-size {}", args.max_size)));
    }
    let (target, depth, poly) = if let Some(n) = args.cn {
        let depth = args.depth.unwrap_or_else(|| min_feit_fine_depth(n));
        (format!("C({n})"), depth, feit_fine_class(n, depth).map_err(formula_error)?)
    } else if let Some(alpha) = &args.calpha {
        let depth = args.depth.unwrap_or_else(|| min_feit_fine_depth(alpha.size()));
        (format!("C{alpha}"), depth, c_alpha_class(alpha, depth).map_err(formula_error)?)
    } else {
        let v = args.dims.as_ref().expect("clap requires one kind");
        let depth = args.depth.unwrap_or_else(|| default_cyclic_depth(v));
        (format!("C{v}"), depth, cyclic_class(v, depth).map_err(formula_error)?)
    };
    if args.json {
        let terms = poly.terms().map(|(exp, c)| TermOutput { exp, coeff: c.to_string() }).collect();
        return Ok(to_json(&ClassOutput { target, depth, class: poly.to_string(), terms }));
    }
    Ok(format!("{poly}\n"))
}

fn evaluate(poly: &LaurentPolynomial, q: u32) -> String {
    poly.evaluate_at(q).expect("q is a prime").to_string()
}

fn equality(cmp: &SeriesComparison) -> (String, String, bool) {
    let observed = match &cmp.first_mismatch {
        None => format!("equal down to L^{}", cmp.window_low),
        Some((m, _, _)) => format!("differs at {}", render_monomial(m)),
    };
    ("equal".into(), observed, cmp.equal)
}

pub fn verify(args: &VerifyArgs) -> Result<VerifyReport, CliError> {
    if let Some(bad) = args.q.iter().find(|&&q| !is_prime(q)) {
        return Err(CliError::Usage(format!("--q {bad} is not a prime")));
    }
    let opts = EnumOptions { threads: args.threads, budget: args.budget };
    let timing = !args.no_timing;
    if args.commuting {
        verify_commuting(args, &opts, timing)
    } else if args.jordan {
        verify_jordan(args, &opts, timing)
    } else if args.cyclic {
        verify_cyclic(args, &opts, timing)
    } else if args.axioms {
        verify_axioms(args, timing)
    } else {
        verify_identities(args, timing)
    }
}

fn verify_commuting(args: &VerifyArgs, opts: &EnumOptions, timing: bool) -> Result<VerifyReport, CliError> {
    let n = args.n.expect("clap requires --n");
    let depth = args.depth.unwrap_or_else(|| min_feit_fine_depth(n));
    let poly = feit_fine_class(n, depth).map_err(formula_error)?;
    let name = format!("[C({n})]");
    let target = Target {
        theorem: "commuting".into(),
        n: Some(n),
        q: args.q.clone(),
        classes: BTreeMap::from([(name.clone(), poly.to_string())]),
        ..Target::default()
    };
    let mut report = ReportBuilder::new(target, timing);
    for &q in &args.q {
        report.check(format!("{name} at L={q}"), || {
            let count = count_commuting_pairs(n as usize, q, opts).map_err(oracle_error)?;
            Ok::<_, CliError>((evaluate(&poly, q), count.to_string()))
        })?;
    }
    Ok(report.finish())
}

fn verify_jordan(args: &VerifyArgs, opts: &EnumOptions, timing: bool) -> Result<VerifyReport, CliError> {
    let n = args.n.expect("clap requires --n");
    let depth = args.depth.unwrap_or_else(|| min_feit_fine_depth(n));
    let alphas = partitions_of(n);
    let mut classes = BTreeMap::new();
    let mut polys = Vec::new();
    for alpha in &alphas {
        let poly = c_alpha_class(alpha, depth).map_err(formula_error)?;
        classes.insert(format!("[C{alpha}]"), poly.to_string());
        polys.push(poly);
    }
    let target = Target { theorem: "jordan".into(), n: Some(n), q: args.q.clone(), classes, ..Target::default() };
    let mut report = ReportBuilder::new(target, timing);
    for &q in &args.q {
        let by_type = count_commuting_pairs_by_type(n as usize, q, opts).map_err(oracle_error)?;
        for (alpha, poly) in alphas.iter().zip(&polys) {
            report.check(format!("[C{alpha}] at L={q}"), || {
                let count = by_type.get(alpha).copied().unwrap_or(0);
                Ok::<_, CliError>((evaluate(poly, q), count.to_string()))
            })?;
        }
    }
    Ok(report.finish())
}

fn verify_cyclic(args: &VerifyArgs, opts: &EnumOptions, timing: bool) -> Result<VerifyReport, CliError> {
    let v = args.dims.as_ref().expect("clap requires --dims");
    let depth = args.depth.unwrap_or_else(|| default_cyclic_depth(v));
    let poly = cyclic_class(v, depth).map_err(formula_error)?;
    let name = format!("[C{v}]");
    let target = Target {
        theorem: "cyclic".into(),
        dims: Some(v.dims().to_vec()),
        q: args.q.clone(),
        classes: BTreeMap::from([(name.clone(), poly.to_string())]),
        ..Target::default()
    };
    let sizes: Vec<usize> = v.dims().iter().map(|&n| n as usize).collect();
    let mut report = ReportBuilder::new(target, timing);
    for &q in &args.q {
        report.check(format!("{name} at L={q}"), || {
            let count = count_cyclic_pairs(&sizes, q, opts).map_err(oracle_error)?;
            Ok::<_, CliError>((evaluate(&poly, q), count.to_string()))
        })?;
    }
    Ok(report.finish())
}

fn verify_axioms(args: &VerifyArgs, timing: bool) -> Result<VerifyReport, CliError> {
    let order = args.order.unwrap_or(6);
    let depth = args.depth.unwrap_or(12);
    if depth < MIN_DEPTH {
        return Err(CliError::Usage(format!("--depth must be at least {MIN_DEPTH}")));
    }
    if args.vars == 0 {
        return Err(CliError::Usage("--vars must be positive".into()));
    }
    let params = BTreeMap::from([
        ("depth".to_string(), depth.to_string()),
        ("order".to_string(), order.to_string()),
        ("seed".to_string(), args.seed.to_string()),
        ("trials".to_string(), args.trials.to_string()),
        ("vars".to_string(), args.vars.to_string()),
    ]);
    let target = Target { theorem: "axioms".into(), params, ..Target::default() };
    let mut report = ReportBuilder::new(target, timing);
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    for trial in 1..=args.trials {
        let inst = random_instance(&mut rng, args.vars, order, i64::from(depth));
        let checks = check_axioms(&inst).map_err(series_error)?;
        for c in checks {
            report.check_with(format!("trial {trial} ({}) {}", c.property, c.statement), || {
                let observed = match &c.detail {
                    None => format!("holds down to L^{}", c.window_low),
                    Some(d) => format!("fails {d}"),
                };
                Ok::<_, CliError>(("holds".into(), observed, c.holds))
            })?;
        }
    }
    Ok(report.finish())
}

fn verify_identities(args: &VerifyArgs, timing: bool) -> Result<VerifyReport, CliError> {
    let order = args.order.unwrap_or(8);
    let depth = args.depth.unwrap_or_else(|| default_depth(order));
    if depth < MIN_DEPTH {
        return Err(CliError::Usage(format!("--depth must be at least {MIN_DEPTH}")));
    }
    let params = BTreeMap::from([("depth".to_string(), depth.to_string()), ("order".to_string(), order.to_string())]);
    let target = Target { theorem: "identities".into(), params, ..Target::default() };
    let mut report = ReportBuilder::new(target, timing);
    let cmp = |a: &MultiSeries, b: &MultiSeries| a.compare(b).map(|c| equality(&c)).map_err(series_error);

    report.check_with("Euler: sum [End(n)]/[GL(n)] t^n against prod (1 - L^-k t)^-1", || {
        let (lhs, rhs) = euler_sides(order, depth);
        cmp(&lhs, &rhs)
    })?;
    report.check_with(format!("Euler q-series to t^{order} q^{depth}"), || {
        let (lhs, rhs) = euler_q_sides(order as usize, depth as usize);
        let pass = lhs == rhs;
        Ok::<_, CliError>(("equal".into(), if pass { "equal".into() } else { "differs".into() }, pass))
    })?;
    report.check_with("closed form (sum p(n) t^n)^(L^2/(L-1)) against the commuting product", || {
        let product = commuting_series_product(order, ProductMode::SingleVariable, depth);
        cmp(&feit_fine_pipeline(order, depth), &product)
    })?;
    // one variable per block size makes the basis grow like binom(2N, N)
    let jordan_order = order.min(JORDAN_IDENTITY_ORDER);
    report.check_with(
        format!("Jordan variables at t_k = t^k against the single-variable product to t^{jordan_order}"),
        || {
            let jordan = commuting_series_product(jordan_order, ProductMode::JordanVariables, depth);
            let single = jordan.specialize_diagonal(Specialization::Graded, jordan_order).map_err(series_error)?;
            cmp(&single, &commuting_series_product(jordan_order, ProductMode::SingleVariable, depth))
        },
    )?;
    report.check_with("cyclic series with r = 1 against the single-variable product", || {
        let product = commuting_series_product(order, ProductMode::SingleVariable, depth);
        cmp(&cyclic_series(1, order, depth), &product)
    })?;
    report.check_with(
        format!("sum u^|lambda| v^l(lambda) against prod (1 - v u^m)^-1 to u^{order} v^{order}"),
        || {
            let (lhs, rhs) = two_variable_partition_identity(order, order);
            cmp(&lhs, &rhs)
        },
    )?;
    report.check_with("partition counts against prod (1 - t^m)^-1", || {
        let mut product = MultiSeries::one(1, order, 0);
        for m in 1..=order {
            product.mul_binomial_factor(&[m], &BigInt::from(1), 0);
        }
        cmp(&partition_series(order, 0), &product)
    })?;
    for k in -6..=6 {
        report.check_with(format!("(1 - t)^(-L^{k}) = (1 - L^{k} t)^-1"), || {
            lefschetz_rule(k, order, i64::from(depth)).map(|c| equality(&c)).map_err(series_error)
        })?;
    }
    Ok(report.finish())
}
