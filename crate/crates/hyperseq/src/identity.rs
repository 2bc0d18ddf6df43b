//! A registry of machine-checkable identities over the hyperfibonacci and
//! hyperlucas sequences, with a runner that verifies parameter ranges
//! exactly and reports counterexamples.
//!
//! Every check compares two signed big integers, so subtraction never
//! wraps; the only tolerance anywhere is the exact rational epsilon of the
//! golden-ratio convergence check (I20). Definition-sensitive identities
//! (I04, I09, I10) take their hyperfibonacci side from the prefix-sum
//! strategy specifically, so a closed-form bug cannot validate itself.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_traits::One;

use crate::error::Error;
use crate::sequence::{binom, Engine, Int, Nat};
use crate::tiling;

/// Exact epsilon for the convergence check: 1/RATIO_EPS_DEN.
pub const RATIO_EPS_DEN: u64 = 1_000_000;

/// Derived convergence-window starts, one per generation 0..=4.
/// See fixtures/ratio_thresholds.txt.
pub fn ratio_thresholds() -> &'static [(u32, u64)] {
    static TABLE: OnceLock<Vec<(u32, u64)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        include_str!("../fixtures/ratio_thresholds.txt")
            .lines()
            .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .map(|l| {
                let mut it = l.split_whitespace();
                let r = it.next().expect("r field").parse().expect("r value");
                let n0 = it.next().expect("n0 field").parse().expect("n0 value");
                (r, n0)
            })
            .collect()
    })
}

fn window_start(r: u32) -> Option<u64> {
    ratio_thresholds()
        .iter()
        .find(|(tr, _)| *tr == r)
        .map(|(_, n0)| *n0)
}

/// Evaluation context: the engine to check and the enumeration cap for the
/// oracle-backed identities.
#[derive(Debug, Clone)]
pub struct Context {
    pub engine: Engine,
    pub enum_cap: u64,
}

impl Default for Context {
    fn default() -> Self {
        Context {
            engine: Engine::standard(),
            enum_cap: tiling::DEFAULT_ENUM_CAP,
        }
    }
}

/// Outcome of one identity instance: both sides, exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub id: &'static str,
    pub n: u64,
    pub r: u32,
    pub lhs: Int,
    pub rhs: Int,
    pub passed: bool,
}

fn result(id: &'static str, n: u64, r: u32, lhs: Int, rhs: Int) -> CheckResult {
    let passed = lhs == rhs;
    CheckResult {
        id,
        n,
        r,
        lhs,
        rhs,
        passed,
    }
}

/// Bounds for a suite run.
#[derive(Debug, Clone)]
pub struct SuiteBounds {
    pub n_max: u64,
    pub r_max: u32,
    pub oracle_m_max: u64,
    pub max_counterexamples: usize,
}

impl SuiteBounds {
    pub fn new(n_max: u64, r_max: u32, oracle_m_max: u64) -> Self {
        SuiteBounds {
            n_max,
            r_max,
            oracle_m_max,
            max_counterexamples: 5,
        }
    }
}

/// The parameter domain of an identity, both as a membership test and as a
/// generator of the grid a suite run walks.
#[derive(Debug, Clone, Copy)]
enum ParamSpace {
    /// Fixed generation, n from n_min. The fixed r ignores r_max: base-row
    /// identities run in every suite.
    FixedR { r: u32, n_min: u64 },
    /// r in r_min..=r_max, n from n_min.
    AllR { r_min: u32, n_min: u64 },
    /// r in 0..=r_max, n >= r (the second parameter is a shift, not a
    /// generation).
    OffsetPairs,
    /// Board-oracle grid: m = n + 2r must stay within the oracle bound.
    OracleBoard,
    /// Bracelet-oracle grid: as above, and m >= 1.
    OracleBracelet,
    /// The derived convergence windows [n0(r), n0(r)+50], r in 0..=4.
    RatioWindow,
}

impl ParamSpace {
    fn contains(&self, n: u64, r: u32) -> bool {
        match *self {
            ParamSpace::FixedR { r: fixed, n_min } => r == fixed && n >= n_min,
            ParamSpace::AllR { r_min, n_min } => r >= r_min && n >= n_min,
            ParamSpace::OffsetPairs => n >= u64::from(r),
            ParamSpace::OracleBoard => true,
            ParamSpace::OracleBracelet => n + 2 * u64::from(r) >= 1,
            ParamSpace::RatioWindow => r <= 4 && n >= 1,
        }
    }

    fn expand(&self, bounds: &SuiteBounds) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        match *self {
            ParamSpace::FixedR { r, n_min } => {
                for n in n_min..=bounds.n_max {
                    out.push((n, r));
                }
            }
            ParamSpace::AllR { r_min, n_min } => {
                for r in r_min..=bounds.r_max {
                    for n in n_min..=bounds.n_max {
                        out.push((n, r));
                    }
                }
            }
            ParamSpace::OffsetPairs => {
                for r in 0..=bounds.r_max {
                    for n in u64::from(r)..=bounds.n_max {
                        out.push((n, r));
                    }
                }
            }
            ParamSpace::OracleBoard | ParamSpace::OracleBracelet => {
                let bracelet = matches!(self, ParamSpace::OracleBracelet);
                for r in 0..=bounds.r_max {
                    let m_base = 2 * u64::from(r);
                    if m_base > bounds.oracle_m_max {
                        break;
                    }
                    let n_hi = (bounds.oracle_m_max - m_base).min(bounds.n_max);
                    for n in 0..=n_hi {
                        if bracelet && n + m_base == 0 {
                            continue;
                        }
                        out.push((n, r));
                    }
                }
            }
            ParamSpace::RatioWindow => {
                for r in 0..=bounds.r_max.min(4) {
                    if let Some(n0) = window_start(r) {
                        for n in n0..=(n0 + 50).min(bounds.n_max) {
                            out.push((n, r));
                        }
                    }
                }
            }
        }
        out
    }
}

/// A registered identity: a stable id, its formula, its parameter domain,
/// and the exact predicate.
pub struct IdentitySpec {
    pub id: &'static str,
    pub description: &'static str,
    pub formula: &'static str,
    pub domain: &'static str,
    space: ParamSpace,
    check: fn(&Context, u64, u32) -> Result<CheckResult, Error>,
}

impl IdentitySpec {
    pub fn in_domain(&self, n: u64, r: u32) -> bool {
        self.space.contains(n, r)
    }
}

// --- helpers -------------------------------------------------------------

/// F_n^(r) by the definitional prefix-sum route, as a signed integer.
fn hf(ctx: &Context, r: u32, n: u64) -> Result<Int, Error> {
    let row = ctx.engine.hyper_fib_cumsum(r, n)?;
    Ok(Int::from(row[n as usize].clone()))
}

/// L_n^(r) by the definitional prefix-sum route.
fn hl(ctx: &Context, r: u32, n: u64) -> Result<Int, Error> {
    let row = ctx.engine.hyper_lucas_cumsum(r, n)?;
    Ok(Int::from(row[n as usize].clone()))
}

fn fib(ctx: &Context, n: u64) -> Result<Int, Error> {
    Ok(Int::from(ctx.engine.fib(n)?))
}

fn lucas(ctx: &Context, n: u64) -> Result<Int, Error> {
    Ok(Int::from(ctx.engine.lucas(n)?))
}

fn bi(n: u64, k: i64) -> Int {
    Int::from(binom(n, k))
}

/// (-1)^n by parity branch.
fn alt_sign(n: u64) -> Int {
    if n % 2 == 0 {
        Int::one()
    } else {
        -Int::one()
    }
}

// --- the twenty checks ---------------------------------------------------

fn check_i01(ctx: &Context, n: u64, r: u32) -> Result<CheckResult, Error> {
    let lhs = hf(ctx, r, n)?;
    let rhs = hf(ctx, r, n - 1)? + hf(ctx, r - 1, n)?;
    Ok(result("I01", n, r, lhs, rhs))
}

fn check_i02(ctx: &Context, n: u64, r: u32) -> Result<CheckResult, Error> {
    let row = ctx.engine.hyper_fib_cumsum(1, n + 2)?;
    let lhs = Int::from(row[n as usize + 2].clone());
    let rhs = Int::from(row[n as usize + 1].clone()) + Int::from(row[n as usize].clone()) + 1;
    Ok(result("I02", n, r, lhs, rhs))
}

fn check_i03(ctx: &Context, n: u64, r: u32) -> Result<CheckResult, Error> {
    let row = ctx.engine.hyper_fib_cumsum(r, n + 2)?;
    let lhs = Int::from(row[n as usize + 2].clone());
    let rhs = Int::from(row[n as usize + 1].clone())
        + Int::from(row[n as usize].clone())
        + bi(n + u64::from(r), i64::from(r) - 1);
    Ok(result("I03", n, r, lhs, rhs))
}

fn check_i04(ctx: &Context, n: u64, r: u32) -> Result<CheckResult, Error> {
    let m = n + 2 * u64::from(r);
    let mut lhs = Int::from(0);
    for k in u64::from(r)..=m / 2 {
        lhs += bi(m - k, k as i64);
    }
    let rhs = hf(ctx, r, n + 1)?;
    Ok(result("I04", n, r, lhs, rhs))
}

fn check_i05(ctx: &Context, n: u64, r: u32) -> Result<CheckResult, Error> {
    let lhs = hf(ctx, 1, n)?;
    let rhs = fib(ctx, n + 2)? - 1;
    Ok(result("I05", n, r, lhs, rhs))
}

fn check_i06(ctx: &Context, n: u64, r: u32) -> Result<CheckResult, Error> {
    let row = ctx.engine.hyper_fib_cumsum(0, n)?;
    let mut lhs = Int::one();
    for v in row {
        lhs += Int::from(v);
    }
    let rhs = fib(ctx, n + 2)?;
    Ok(result("I06", n, r, lhs, rhs))
}

fn check_i07(ctx: &Context, n: u64, r: u32) -> Result<CheckResult, Error> {
    let row = ctx.engine.hyper_fib_cumsum(1, n)?;
    let mut lhs = Int::from(3 + n);
    for v in row {
        lhs += Int::from(v);
    }
    let rhs = fib(ctx, n + 4)?;
    Ok(result("I07", n, r, lhs, rhs))
}

fn check_i08(ctx: &Context, n: u64, r: u32) -> Result<CheckResult, Error> {
    let lhs = hf(ctx, 2, n)?;
    let rhs = fib(ctx, n + 4)? - Int::from(n) - 3;
    Ok(result("I08", n, r, lhs, rhs))
}

fn check_i09(ctx: &Context, n: u64, r: u32) -> Result<CheckResult, Error> {
    let lhs = hf(ctx, r, n)?;
    let mut rhs = fib(ctx, n + 2 * u64::from(r))?;
    for k in 0..u64::from(r) {
        rhs -= bi(n + u64::from(r) + k, i64::from(r) - 1 - k as i64);
    }
    Ok(result("I09", n, r, lhs, rhs))
}

fn check_i10(ctx: &Context, n: u64, r: u32) -> Result<CheckResult, Error> {
    let lhs = hf(ctx, r, n + 1)?;
    let mut rhs = Int::from(0);
    for k in 0..=n / 2 {
        rhs += bi(n + u64::from(r) - k, i64::from(r) + k as i64);
    }
    Ok(result("I10", n, r, lhs, rhs))
}

fn check_i11(ctx: &Context, n: u64, r: u32) -> Result<CheckResult, Error> {
    let lhs = fib(ctx, n)?;
    let mut rhs = Int::from(0);
    if n >= 1 {
        for k in 0..=(n - 1) / 2 {
            rhs += bi(n - k - 1, k as i64);
        }
    }
    Ok(result("I11", n, r, lhs, rhs))
}

fn check_i12(ctx: &Context, n: u64, r: u32) -> Result<CheckResult, Error> {
    let m = n + 2 * u64::from(r);
    let count = tiling::enumerate_board_with_cap(m, u64::from(r), ctx.enum_cap)?.count();
    let lhs = Int::from(count);
    let rhs = hf(ctx, r, n + 1)?;
    Ok(result("I12", n, r, lhs, rhs))
}

fn check_i13(ctx: &Context, n: u64, r: u32) -> Result<CheckResult, Error> {
    let m = n + 2 * u64::from(r);
    let count = tiling::enumerate_bracelet_with_cap(m, u64::from(r), ctx.enum_cap)?.count();
    let lhs = Int::from(count);
    let rhs = hl(ctx, r, n)?;
    Ok(result("I13", n, r, lhs, rhs))
}

fn check_i14(ctx: &Context, n: u64, r: u32) -> Result<CheckResult, Error> {
    let lhs = hl(ctx, r, n)?;
    let rhs = hf(ctx, r, n - 1)?
        + hf(ctx, r, n + 1)?
        + bi(n + u64::from(r) - 1, i64::from(r) - 1);
    Ok(result("I14", n, r, lhs, rhs))
}

fn check_i15(ctx: &Context, n: u64, r: u32) -> Result<CheckResult, Error> {
    let lhs = lucas(ctx, n)?;
    let rhs = fib(ctx, n - 1)? + fib(ctx, n + 1)?;
    Ok(result("I15", n, r, lhs, rhs))
}

fn check_i16(ctx: &Context, n: u64, r: u32) -> Result<CheckResult, Error> {
    let row = ctx.engine.hyper_fib_cumsum(1, n + 1)?;
    let f = |i: u64| Int::from(row[i as usize].clone());
    let lhs = f(n) * f(n) - f(n - 1) * f(n + 1);
    let rhs = f(n - 3) + 1 + alt_sign(n + 1);
    Ok(result("I16", n, r, lhs, rhs))
}

fn check_i17(ctx: &Context, n: u64, r: u32) -> Result<CheckResult, Error> {
    let row = ctx.engine.hyper_fib_cumsum(1, n + 2)?;
    let f = |i: u64| Int::from(row[i as usize].clone());
    let lhs = f(n) * f(n) - f(n - 2) * f(n + 2);
    let rhs = f(n) + 1 + alt_sign(n);
    Ok(result("I17", n, r, lhs, rhs))
}

fn check_i18(ctx: &Context, n: u64, r: u32) -> Result<CheckResult, Error> {
    let lhs = fib(ctx, n - 1)? * fib(ctx, n + 1)? - fib(ctx, n)? * fib(ctx, n)?;
    let rhs = alt_sign(n);
    Ok(result("I18", n, r, lhs, rhs))
}

fn check_i19(ctx: &Context, n: u64, r: u32) -> Result<CheckResult, Error> {
    let shift = u64::from(r);
    let lhs =
        fib(ctx, n)? * fib(ctx, n)? - fib(ctx, n - shift)? * fib(ctx, n + shift)?;
    let fr = fib(ctx, shift)?;
    let rhs = alt_sign(n - shift) * &fr * &fr;
    Ok(result("I19", n, r, lhs, rhs))
}

fn check_i20(ctx: &Context, n: u64, r: u32) -> Result<CheckResult, Error> {
    let (within, _gap) =
        ctx.engine
            .ratio_gap_within(r, n, &Nat::one(), &Nat::from(RATIO_EPS_DEN))?;
    // The only tolerated check: "within epsilon" is encoded as 1 = 1.
    let lhs = Int::from(u8::from(within));
    Ok(result("I20", n, r, lhs, Int::one()))
}

// --- registry ------------------------------------------------------------

static REGISTRY: &[IdentitySpec] = &[
    IdentitySpec {
        id: "I01",
        description: "two-dimensional hyperfibonacci recurrence",
        formula: "F_n^(r) = F_{n-1}^(r) + F_n^(r-1)",
        domain: "n >= 1, r >= 1",
        space: ParamSpace::AllR { r_min: 1, n_min: 1 },
        check: check_i01,
    },
    IdentitySpec {
        id: "I02",
        description: "first-generation recurrence with additive constant 1",
        formula: "F_{n+2}^(1) = F_{n+1}^(1) + F_n^(1) + 1",
        domain: "n >= 0, r = 1",
        space: ParamSpace::FixedR { r: 1, n_min: 0 },
        check: check_i02,
    },
    IdentitySpec {
        id: "I03",
        description: "polytopic-corrected recurrence, every generation",
        formula: "F_{n+2}^(r) = F_{n+1}^(r) + F_n^(r) + C(n+r, r-1)",
        domain: "n >= 0, r >= 0",
        space: ParamSpace::AllR { r_min: 0, n_min: 0 },
        check: check_i03,
    },
    IdentitySpec {
        id: "I04",
        description: "binomial sum over domino counts equals hyperfibonacci",
        formula: "sum_{k=r}^{floor((n+2r)/2)} C(n+2r-k, k) = F_{n+1}^(r)",
        domain: "n >= 0, r >= 0",
        space: ParamSpace::AllR { r_min: 0, n_min: 0 },
        check: check_i04,
    },
    IdentitySpec {
        id: "I05",
        description: "first generation from shifted Fibonacci",
        formula: "F_n^(1) = F_{n+2} - 1",
        domain: "n >= 0, r = 1",
        space: ParamSpace::FixedR { r: 1, n_min: 0 },
        check: check_i05,
    },
    IdentitySpec {
        id: "I06",
        description: "Fibonacci prefix sum",
        formula: "1 + sum_{k=0}^n F_k = F_{n+2}",
        domain: "n >= 0, r = 0",
        space: ParamSpace::FixedR { r: 0, n_min: 0 },
        check: check_i06,
    },
    IdentitySpec {
        id: "I07",
        description: "first-generation prefix sum",
        formula: "3 + n + sum_{k=0}^n F_k^(1) = F_{n+4}",
        domain: "n >= 0, r = 1",
        space: ParamSpace::FixedR { r: 1, n_min: 0 },
        check: check_i07,
    },
    IdentitySpec {
        id: "I08",
        description: "second generation from shifted Fibonacci",
        formula: "F_n^(2) = F_{n+4} - n - 3",
        domain: "n >= 0, r = 2",
        space: ParamSpace::FixedR { r: 2, n_min: 0 },
        check: check_i08,
    },
    IdentitySpec {
        id: "I09",
        description: "closed form: shifted Fibonacci minus r binomials",
        formula: "F_n^(r) = F_{n+2r} - sum_{k=0}^{r-1} C(n+r+k, r-1-k)",
        domain: "n >= 0, r >= 0",
        space: ParamSpace::AllR { r_min: 0, n_min: 0 },
        check: check_i09,
    },
    IdentitySpec {
        id: "I10",
        description: "pure binomial sum for hyperfibonacci",
        formula: "F_{n+1}^(r) = sum_{k=0}^{floor(n/2)} C(n+r-k, r+k)",
        domain: "n >= 0, r >= 0",
        space: ParamSpace::AllR { r_min: 0, n_min: 0 },
        check: check_i10,
    },
    IdentitySpec {
        id: "I11",
        description: "Fibonacci as a diagonal binomial sum",
        formula: "F_n = sum_{k=0}^{floor((n-1)/2)} C(n-k-1, k)",
        domain: "n >= 0, r = 0",
        space: ParamSpace::FixedR { r: 0, n_min: 0 },
        check: check_i11,
    },
    IdentitySpec {
        id: "I12",
        description: "board-tiling oracle count equals hyperfibonacci",
        formula: "#tilings(board n+2r, >= r dominoes) = F_{n+1}^(r)",
        domain: "n >= 0, r >= 0, n + 2r within the enumeration cap",
        space: ParamSpace::OracleBoard,
        check: check_i12,
    },
    IdentitySpec {
        id: "I13",
        description: "bracelet-tiling oracle count equals hyperlucas",
        formula: "#tilings(bracelet n+2r, >= r dominoes) = L_n^(r)",
        domain: "n + 2r >= 1, n + 2r within the enumeration cap",
        space: ParamSpace::OracleBracelet,
        check: check_i13,
    },
    IdentitySpec {
        id: "I14",
        description: "hyperlucas from hyperfibonacci neighbors",
        formula: "L_n^(r) = F_{n-1}^(r) + F_{n+1}^(r) + C(n+r-1, r-1)",
        domain: "n >= 1, r >= 0",
        space: ParamSpace::AllR { r_min: 0, n_min: 1 },
        check: check_i14,
    },
    IdentitySpec {
        id: "I15",
        description: "Lucas from Fibonacci neighbors",
        formula: "L_n = F_{n-1} + F_{n+1}",
        domain: "n >= 1, r = 0",
        space: ParamSpace::FixedR { r: 0, n_min: 1 },
        check: check_i15,
    },
    IdentitySpec {
        id: "I16",
        description: "Cassini-like identity, first generation",
        formula: "F_n^(1)^2 - F_{n-1}^(1) F_{n+1}^(1) = F_{n-3}^(1) + 1 + (-1)^{n+1}",
        domain: "n >= 3, r = 1",
        space: ParamSpace::FixedR { r: 1, n_min: 3 },
        check: check_i16,
    },
    IdentitySpec {
        id: "I17",
        description: "Catalan-like identity, first generation",
        formula: "F_n^(1)^2 - F_{n-2}^(1) F_{n+2}^(1) = F_n^(1) + 1 + (-1)^n",
        domain: "n >= 2, r = 1",
        space: ParamSpace::FixedR { r: 1, n_min: 2 },
        check: check_i17,
    },
    IdentitySpec {
        id: "I18",
        description: "Cassini identity",
        formula: "F_{n-1} F_{n+1} - F_n^2 = (-1)^n",
        domain: "n >= 1, r = 0",
        space: ParamSpace::FixedR { r: 0, n_min: 1 },
        check: check_i18,
    },
    IdentitySpec {
        id: "I19",
        description: "Catalan identity (r is the offset)",
        formula: "F_n^2 - F_{n-r} F_{n+r} = (-1)^{n-r} F_r^2",
        domain: "n >= r",
        space: ParamSpace::OffsetPairs,
        check: check_i19,
    },
    IdentitySpec {
        id: "I20",
        description: "golden-ratio convergence within 1/1000000",
        formula: "|F_{n+1}^(r)/F_n^(r) - phi| < 1/1000000 on the derived window",
        domain: "n >= 1, r <= 4",
        space: ParamSpace::RatioWindow,
        check: check_i20,
    },
];

/// All registered identities, ordered by id.
pub fn list_identities() -> &'static [IdentitySpec] {
    REGISTRY
}

pub fn find_identity(id: &str) -> Result<&'static IdentitySpec, Error> {
    REGISTRY
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Evaluates one identity instance exactly. Out-of-domain parameters are an
/// error, never a silent pass.
pub fn check_identity(ctx: &Context, id: &str, n: u64, r: u32) -> Result<CheckResult, Error> {
    let spec = find_identity(id)?;
    if !spec.in_domain(n, r) {
        return Err(Error::domain(format!(
            "{id} requires {}; got n = {n}, r = {r}",
            spec.domain
        )));
    }
    (spec.check)(ctx, n, r)
}

/// Per-identity outcome of a suite run.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub id: &'static str,
    pub checked: u64,
    pub failure_count: u64,
    pub failures: Vec<CheckResult>,
    pub wall: Duration,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

/// Outcome of a whole suite run. Deterministic for fixed bounds.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub entries: Vec<IdentityReport>,
}

impl SuiteReport {
    pub fn total_failures(&self) -> u64 {
        self.entries.iter().map(|e| e.failure_count).sum()
    }

    pub fn all_passed(&self) -> bool {
        self.total_failures() == 0
    }

    /// One line per identity, "id status checked_count failure_count",
    /// followed by counterexample lines "id n r lhs rhs".
    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let status = if e.passed() { "pass" } else { "fail" };
            out.push_str(&format!(
                "{} {} {} {}\n",
                e.id, status, e.checked, e.failure_count
            ));
        }
        for e in &self.entries {
            for f in &e.failures {
                out.push_str(&format!("{} {} {} {} {}\n", f.id, f.n, f.r, f.lhs, f.rhs));
            }
        }
        out
    }

    /// Human-readable report with descriptions and wall times.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let spec = find_identity(e.id).expect("registry id");
            let status = if e.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{} {}  {:>8} checked  {:>5} failed  {:>8.2?}  {}\n",
                e.id, status, e.checked, e.failure_count, e.wall, spec.formula
            ));
            for f in &e.failures {
                out.push_str(&format!(
                    "    counterexample n={} r={}: lhs={} rhs={}\n",
                    f.n, f.r, f.lhs, f.rhs
                ));
            }
        }
        out
    }
}

/// Runs every registered identity over its domain intersected with the
/// bounds. Failures are data, not errors; counterexamples are sorted by
/// (n, r) and capped per identity.
pub fn run_suite(ctx: &Context, bounds: &SuiteBounds) -> Result<SuiteReport, Error> {
    run_suite_filtered(ctx, bounds, None)
}

/// As `run_suite`, optionally restricted to a single identity id.
pub fn run_suite_filtered(
    ctx: &Context,
    bounds: &SuiteBounds,
    only: Option<&str>,
) -> Result<SuiteReport, Error> {
    if let Some(id) = only {
        find_identity(id)?;
    }
    let mut entries = Vec::new();
    for spec in REGISTRY {
        if only.is_some_and(|id| id != spec.id) {
            continue;
        }
        let start = Instant::now();
        let mut checked = 0u64;
        let mut failures = Vec::new();
        for (n, r) in spec.space.expand(bounds) {
            let res = (spec.check)(ctx, n, r)?;
            checked += 1;
            if !res.passed {
                failures.push(res);
            }
        }
        failures.sort_by_key(|f| (f.n, f.r));
        let failure_count = failures.len() as u64;
        failures.truncate(bounds.max_counterexamples);
        entries.push(IdentityReport {
            id: spec.id,
            checked,
            failure_count,
            failures,
            wall: start.elapsed(),
        });
    }
    Ok(SuiteReport { entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_has_twenty_unique_ids() {
        let ids: Vec<&str> = list_identities().iter().map(|s| s.id).collect();
        assert_eq!(ids.len(), 20);
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 20);
        assert_eq!(ids, sorted, "registry is ordered by id");
    }

    #[test]
    fn registry_domains() {
        let i16 = find_identity("I16").unwrap();
        assert!(i16.in_domain(3, 1));
        assert!(!i16.in_domain(2, 1));
        assert!(!i16.in_domain(5, 2));

        let i03 = find_identity("I03").unwrap();
        assert!(i03.in_domain(0, 0));
        assert!(i03.in_domain(7, 3));
    }

    #[test]
    fn cassini_like_instance() {
        let ctx = Context::default();
        let res = check_identity(&ctx, "I16", 4, 1).unwrap();
        assert!(res.passed);
        assert_eq!(res.lhs, Int::from(1));
        assert_eq!(res.rhs, Int::from(1));
    }

    #[test]
    fn catalan_like_instance() {
        let ctx = Context::default();
        let res = check_identity(&ctx, "I17", 4, 1).unwrap();
        assert!(res.passed);
        assert_eq!(res.lhs, Int::from(9));
        assert_eq!(res.rhs, Int::from(9));
    }

    #[test]
    fn prefix_sum_instance() {
        let ctx = Context::default();
        let res = check_identity(&ctx, "I07", 2, 1).unwrap();
        assert!(res.passed);
        assert_eq!(res.lhs, Int::from(8));
        assert_eq!(res.rhs, Int::from(8));
    }

    #[test]
    fn unknown_id_and_out_of_domain_error() {
        let ctx = Context::default();
        assert!(matches!(
            check_identity(&ctx, "I99", 1, 0),
            Err(Error::UnknownIdentity(_))
        ));
        assert!(matches!(
            check_identity(&ctx, "I16", 2, 1),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn small_suite_is_clean() {
        let ctx = Context::default();
        let report = run_suite(&ctx, &SuiteBounds::new(30, 3, 12)).unwrap();
        assert!(report.all_passed(), "{}", report.render_text());
        assert_eq!(report.entries.len(), 20);
    }

    #[test]
    fn degenerate_suite_is_clean() {
        let ctx = Context::default();
        let report = run_suite(&ctx, &SuiteBounds::new(0, 0, 0)).unwrap();
        assert!(report.all_passed(), "{}", report.render_text());
    }

    #[test]
    fn corrupted_seed_is_detected() {
        let ctx = Context {
            engine: Engine::corrupted_fib_seed(),
            ..Context::default()
        };
        let report = run_suite(&ctx, &SuiteBounds::new(20, 3, 10)).unwrap();
        for id in ["I05", "I06", "I09"] {
            let entry = report.entries.iter().find(|e| e.id == id).unwrap();
            assert!(!entry.passed(), "{id} should fail under a corrupted seed");
            assert!(entry.failures[0].n <= 2, "{id} fails at small n");
        }
    }

    #[test]
    fn machine_format_shape() {
        let ctx = Context::default();
        let report = run_suite(&ctx, &SuiteBounds::new(5, 1, 6)).unwrap();
        let text = report.render_machine();
        assert_eq!(text.lines().count(), 20);
        for line in text.lines() {
            let fields: Vec<&str> = line.split_whitespace().collect();
            assert_eq!(fields.len(), 4);
            assert_eq!(fields[1], "pass");
        }
    }

    #[test]
    fn thresholds_fixture_is_complete() {
        let t = ratio_thresholds();
        assert_eq!(t.len(), 5);
        for r in 0..=4 {
            assert!(window_start(r).is_some(), "missing n0 for r = {r}");
        }
    }
}
