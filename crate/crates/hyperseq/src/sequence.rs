//! Exact sequence computation: Fibonacci, Lucas, their hyper-generations,
//! binomial and polytopic numbers, and exact golden-ratio comparisons.
//!
//! Generation `r` of a hyper-sequence is the `r`-fold iterated partial sum
//! of the base sequence; `r = 0` is the base sequence itself. Hyperfibonacci
//! values can be computed by five mutually independent strategies
//! (prefix sums, the two-dimensional recurrence, the polytopic-corrected
//! recurrence, the closed form, and a pure binomial sum); they must agree
//! value-for-value.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::Error;

/// Arbitrary-precision nonnegative integer. Decimal string rendering is the
/// canonical serialization.
pub type Nat = BigUint;
/// Arbitrary-precision signed integer, used for identity differences.
pub type Int = BigInt;

/// Largest supported generation.
pub const MAX_GENERATION: u32 = 64;
/// Largest index for linear (row-building) strategies.
pub const MAX_LINEAR_INDEX: u64 = 1_000_000;
/// Largest index for closed-form point queries.
pub const MAX_POINT_INDEX: u64 = 1_000_000_000;

/// Big-integer operation counter, reported by the benchmark command.
pub mod ops {
    use std::cell::Cell;

    thread_local! {
        static BIG_OPS: Cell<u64> = const { Cell::new(0) };
    }

    pub fn reset() {
        BIG_OPS.with(|c| c.set(0));
    }

    pub fn count() -> u64 {
        BIG_OPS.with(|c| c.get())
    }

    pub(crate) fn note(n: u64) {
        BIG_OPS.with(|c| c.set(c.get() + n));
    }
}

fn check_generation(r: u32) -> Result<(), Error> {
    if u64::from(r) > u64::from(MAX_GENERATION) {
        return Err(Error::Capacity {
            what: "generation",
            value: u64::from(r),
            cap: u64::from(MAX_GENERATION),
        });
    }
    Ok(())
}

fn check_linear(n: u64) -> Result<(), Error> {
    if n > MAX_LINEAR_INDEX {
        return Err(Error::Capacity {
            what: "index",
            value: n,
            cap: MAX_LINEAR_INDEX,
        });
    }
    Ok(())
}

fn check_point(n: u64) -> Result<(), Error> {
    if n > MAX_POINT_INDEX {
        return Err(Error::Capacity {
            what: "index",
            value: n,
            cap: MAX_POINT_INDEX,
        });
    }
    Ok(())
}

/// Binomial coefficient C(n, k), with C(n, k) = 0 for k < 0 or k > n.
///
/// The out-of-range convention makes every downstream binomial use total:
/// it collapses the r = 0 cases of the hyper-sequence formulas to the plain
/// Fibonacci/Lucas ones without special cases.
pub fn binom(n: u64, k: i64) -> Nat {
    if k < 0 {
        return Nat::zero();
    }
    let k = k as u64;
    if k > n {
        return Nat::zero();
    }
    let k = k.min(n - k);
    let mut acc = Nat::one();
    for i in 0..k {
        // exact division at every step: acc is C(n, i+1) after it
        acc = acc * Nat::from(n - i) / Nat::from(i + 1);
        ops::note(2);
    }
    acc
}

/// The n-th regular r-topic number, C(n + r - 1, r).
///
/// r = 1 gives the naturals, r = 2 the triangular numbers. polytopic(0, n)
/// is 1 for every n, the degenerate 0-topic row.
pub fn polytopic(r: u32, n: u64) -> Nat {
    if r == 0 && n == 0 {
        return Nat::one();
    }
    binom(n + u64::from(r) - 1, i64::from(r))
}

/// Which side of the golden ratio a rational sits on. Equality is impossible
/// for rational inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiSide {
    BelowPhi,
    AbovePhi,
}

/// The exact position of a ratio p/q relative to the golden ratio.
#[derive(Debug, Clone)]
pub struct RationalGap {
    pub numerator: Nat,
    pub denominator: Nat,
    pub side: PhiSide,
}

/// Compares x/y (x signed, y > 0) against the golden ratio using only
/// integer arithmetic: x/y > phi iff 2x - y > 0 and (2x - y)^2 > 5 y^2.
fn cmp_ratio_to_phi(x: &Int, y: &Nat) -> Ordering {
    let t: Int = Int::from(2) * x - Int::from(y.clone());
    if t.sign() != num_bigint::Sign::Plus {
        return Ordering::Less;
    }
    let t = t.magnitude().clone();
    let lhs = &t * &t;
    let rhs = Nat::from(5u32) * y * y;
    match lhs.cmp(&rhs) {
        Ordering::Equal => unreachable!("phi is irrational; a rational cannot equal it"),
        ord => ord,
    }
}

fn phi_side(p: &Nat, q: &Nat) -> PhiSide {
    match cmp_ratio_to_phi(&Int::from(p.clone()), q) {
        Ordering::Less => PhiSide::BelowPhi,
        Ordering::Greater => PhiSide::AbovePhi,
        Ordering::Equal => unreachable!(),
    }
}

/// Parses an exact rational "NUM/DEN" with a positive denominator.
pub fn parse_eps(s: &str) -> Result<(Nat, Nat), Error> {
    let (num, den) = s
        .split_once('/')
        .ok_or_else(|| Error::domain(format!("expected NUM/DEN rational, got `{s}`")))?;
    let parse = |part: &str| {
        part.trim()
            .parse::<Nat>()
            .map_err(|e| Error::domain(format!("bad rational component `{part}`: {e}")))
    };
    let num = parse(num)?;
    let den = parse(den)?;
    if den.is_zero() {
        return Err(Error::domain("rational denominator must be positive"));
    }
    Ok((num, den))
}

/// Sequence engine with configurable base-row seeds.
///
/// The seeds exist so a deliberately corrupted engine can demonstrate that
/// the identity suite actually detects wrong values (mutation testing); the
/// standard engine carries F_0 = 0, F_1 = 1, L_0 = 2, L_1 = 1.
#[derive(Debug, Clone)]
pub struct Engine {
    pub fib_seeds: (Nat, Nat),
    pub lucas_seeds: (Nat, Nat),
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            fib_seeds: (Nat::zero(), Nat::one()),
            lucas_seeds: (Nat::from(2u32), Nat::one()),
        }
    }
}

/// Returns (F_n, F_{n+1}) of the standard Fibonacci sequence by fast
/// doubling: O(log n) big-integer multiplications.
fn fib_pair(n: u64) -> (Nat, Nat) {
    if n == 0 {
        return (Nat::zero(), Nat::one());
    }
    let (a, b) = fib_pair(n >> 1);
    // F_{2k} = F_k (2 F_{k+1} - F_k),  F_{2k+1} = F_k^2 + F_{k+1}^2
    let two_b_minus_a = (&b << 1) - &a;
    let c = &a * &two_b_minus_a;
    let d = &a * &a + &b * &b;
    ops::note(4);
    if n & 1 == 0 {
        (c, d)
    } else {
        let e = &c + &d;
        (d, e)
    }
}

impl Engine {
    pub fn standard() -> Self {
        Self::default()
    }

    /// Engine with the Fibonacci seed corrupted to F_1 = 2, for mutation
    /// testing of the identity suite.
    pub fn corrupted_fib_seed() -> Self {
        Engine {
            fib_seeds: (Nat::zero(), Nat::from(2u32)),
            ..Self::default()
        }
    }

    /// n-th term of the base Fibonacci row, by fast doubling.
    pub fn fib(&self, n: u64) -> Result<Nat, Error> {
        check_point(n)?;
        Ok(self.seeded(&self.fib_seeds, n))
    }

    /// n-th term of the base Lucas row (L_0 = 2, L_1 = 1).
    pub fn lucas(&self, n: u64) -> Result<Nat, Error> {
        check_point(n)?;
        Ok(self.seeded(&self.lucas_seeds, n))
    }

    /// Evaluates the Fibonacci-recurrence sequence with seeds (a, b) at n:
    /// G_n = a F_{n-1} + b F_n, driven by one fast-doubling pair.
    fn seeded(&self, seeds: &(Nat, Nat), n: u64) -> Nat {
        let (a, b) = seeds;
        if n == 0 {
            return a.clone();
        }
        let (f_n, f_n1) = fib_pair(n);
        let f_prev = &f_n1 - &f_n;
        ops::note(3);
        a * f_prev + b * f_n
    }

    fn base_row(&self, seeds: &(Nat, Nat), n_max: u64) -> Vec<Nat> {
        let mut row = Vec::with_capacity(n_max as usize + 1);
        let (mut a, mut b) = seeds.clone();
        for _ in 0..=n_max {
            let next = &a + &b;
            ops::note(1);
            row.push(std::mem::replace(&mut a, std::mem::replace(&mut b, next)));
        }
        row
    }

    fn prefix_sums_in_place(row: &mut [Nat]) {
        for i in 1..row.len() {
            let prev = row[i - 1].clone();
            row[i] += prev;
            ops::note(1);
        }
    }

    /// Hyperfibonacci row [F_0^(r), ..., F_{n_max}^(r)] by r successive
    /// prefix-sum passes over the base Fibonacci row.
    pub fn hyper_fib_cumsum(&self, r: u32, n_max: u64) -> Result<Vec<Nat>, Error> {
        check_generation(r)?;
        check_linear(n_max)?;
        let mut row = self.base_row(&self.fib_seeds, n_max);
        for _ in 0..r {
            Self::prefix_sums_in_place(&mut row);
        }
        Ok(row)
    }

    /// Hyperlucas row [L_0^(r), ..., L_{n_max}^(r)] by prefix sums.
    pub fn hyper_lucas_cumsum(&self, r: u32, n_max: u64) -> Result<Vec<Nat>, Error> {
        check_generation(r)?;
        check_linear(n_max)?;
        let mut row = self.base_row(&self.lucas_seeds, n_max);
        for _ in 0..r {
            Self::prefix_sums_in_place(&mut row);
        }
        Ok(row)
    }

    /// F_n^(r) by the two-dimensional recurrence
    /// F_n^(g) = F_{n-1}^(g) + F_n^(g-1), generation by generation.
    pub fn hyper_fib_rec(&self, r: u32, n: u64) -> Result<Nat, Error> {
        check_generation(r)?;
        check_linear(n)?;
        let mut prev = self.base_row(&self.fib_seeds, n);
        for _ in 0..r {
            let mut cur = Vec::with_capacity(prev.len());
            cur.push(prev[0].clone());
            for j in 1..prev.len() {
                let v = &cur[j - 1] + &prev[j];
                ops::note(1);
                cur.push(v);
            }
            prev = cur;
        }
        Ok(prev.pop().expect("row is nonempty"))
    }

    /// Hyperfibonacci row by the polytopic-corrected Fibonacci recurrence
    /// F_{n+2}^(r) = F_{n+1}^(r) + F_n^(r) + C(n+r, r-1), seeded with 0, 1.
    /// For r = 0 the binomial convention reduces it to plain Fibonacci.
    pub fn hyper_fib_poly_rec(&self, r: u32, n_max: u64) -> Result<Vec<Nat>, Error> {
        check_generation(r)?;
        check_linear(n_max)?;
        let (a, b) = self.fib_seeds.clone();
        let mut row = Vec::with_capacity(n_max as usize + 1);
        row.push(a);
        if n_max >= 1 {
            row.push(b);
        }
        for n in 0..n_max.saturating_sub(1) {
            let correction = binom(n + u64::from(r), i64::from(r) - 1);
            let v = &row[n as usize + 1] + &row[n as usize] + correction;
            ops::note(2);
            row.push(v);
        }
        row.truncate(n_max as usize + 1);
        Ok(row)
    }

    /// F_n^(r) in closed form: F_{n+2r} minus a sum of r binomials,
    /// F_n^(r) = F_{n+2r} - sum_{k=0}^{r-1} C(n+r+k, r-1-k).
    ///
    /// The difference is a hyperfibonacci number, hence nonnegative; an
    /// underflow here is an internal invariant violation and panics.
    pub fn hyper_fib_closed(&self, r: u32, n: u64) -> Result<Nat, Error> {
        check_generation(r)?;
        check_point(n)?;
        let f = self.fib(n + 2 * u64::from(r))?;
        let mut sum = Nat::zero();
        for k in 0..u64::from(r) {
            sum += binom(n + u64::from(r) + k, i64::from(r) - 1 - k as i64);
            ops::note(1);
        }
        if sum > f {
            panic!("closed-form subtraction underflow at r={r}, n={n}: implementation bug");
        }
        Ok(f - sum)
    }

    /// F_n^(r) as a pure binomial sum, with no Fibonacci evaluation in the
    /// path: F_{n+1}^(r) = sum_{k=0}^{floor(n/2)} C(n+r-k, r+k).
    pub fn hyper_fib_binom_sum(&self, r: u32, n: u64) -> Result<Nat, Error> {
        check_generation(r)?;
        check_linear(n)?;
        if n == 0 {
            return Ok(Nat::zero());
        }
        let m = n - 1;
        let mut sum = Nat::zero();
        for k in 0..=m / 2 {
            sum += binom(m + u64::from(r) - k, i64::from(r) + k as i64);
            ops::note(1);
        }
        Ok(sum)
    }

    /// L_n^(r) from two closed-form hyperfibonacci values plus one binomial:
    /// L_n^(r) = F_{n-1}^(r) + F_{n+1}^(r) + C(n+r-1, r-1); L_0^(r) = 2.
    pub fn hyper_lucas_closed(&self, r: u32, n: u64) -> Result<Nat, Error> {
        check_generation(r)?;
        check_point(n)?;
        if n == 0 {
            return Ok(self.lucas_seeds.0.clone());
        }
        let lo = self.hyper_fib_closed(r, n - 1)?;
        let hi = self.hyper_fib_closed(r, n + 1)?;
        ops::note(2);
        Ok(lo + hi + binom(n + u64::from(r) - 1, i64::from(r) - 1))
    }

    /// Decides |F_{n+1}^(r)/F_n^(r) - phi| < eps_num/eps_den exactly, and
    /// reports which side of phi the ratio sits on.
    ///
    /// Each one-sided comparison clears denominators and reduces to a sign
    /// test of an integer against an integer multiple of sqrt(5), settled by
    /// squaring. No real number is ever materialized.
    pub fn ratio_gap_within(
        &self,
        r: u32,
        n: u64,
        eps_num: &Nat,
        eps_den: &Nat,
    ) -> Result<(bool, RationalGap), Error> {
        if eps_den.is_zero() {
            return Err(Error::domain("epsilon denominator must be positive"));
        }
        if n == 0 {
            return Err(Error::domain(
                "ratio undefined at n = 0 (denominator F_0 = 0)",
            ));
        }
        let p = self.hyper_fib_closed(r, n + 1)?;
        let q = self.hyper_fib_closed(r, n)?;
        if q.is_zero() {
            return Err(Error::domain(format!("F_{n}^({r}) is zero")));
        }
        let side = phi_side(&p, &q);
        // p/q < phi + e  <=>  (p d - e_n q) / (q d) < phi
        // p/q > phi - e  <=>  (p d + e_n q) / (q d) > phi
        let scaled_den = &q * eps_den;
        let upper = Int::from(&p * eps_den) - Int::from(eps_num * &q);
        let lower = Int::from(&p * eps_den) + Int::from(eps_num * &q);
        let within = cmp_ratio_to_phi(&upper, &scaled_den) == Ordering::Less
            && cmp_ratio_to_phi(&lower, &scaled_den) == Ordering::Greater;
        Ok((
            within,
            RationalGap {
                numerator: p,
                denominator: q,
                side,
            },
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Nat {
        Nat::from(v)
    }

    fn row(values: &[u64]) -> Vec<Nat> {
        values.iter().copied().map(Nat::from).collect()
    }

    #[test]
    fn fib_seed_values() {
        let e = Engine::standard();
        assert_eq!(e.fib(0).unwrap(), nat(0));
        assert_eq!(e.fib(1).unwrap(), nat(1));
        assert_eq!(e.fib(10).unwrap(), nat(55));
        assert_eq!(e.fib(6).unwrap(), nat(8)); // F_4^(1) = F_6 - 1 = 7
    }

    #[test]
    fn lucas_seed_values() {
        let e = Engine::standard();
        assert_eq!(e.lucas(0).unwrap(), nat(2));
        assert_eq!(e.lucas(1).unwrap(), nat(1));
        assert_eq!(e.lucas(2).unwrap(), nat(3));
        assert_eq!(e.lucas(4).unwrap(), nat(7));
    }

    #[test]
    fn fib_capacity_error() {
        let e = Engine::standard();
        assert!(matches!(
            e.fib(MAX_POINT_INDEX + 1),
            Err(Error::Capacity { cap, .. }) if cap == MAX_POINT_INDEX
        ));
    }

    #[test]
    fn binom_small_values() {
        assert_eq!(binom(5, 2), nat(10));
        assert_eq!(binom(4, -1), nat(0));
        assert_eq!(binom(4, 1), nat(4)); // the |A| count for the 7-board split
        assert_eq!(binom(4, 5), nat(0));
        assert_eq!(binom(0, 0), nat(1));
    }

    #[test]
    fn polytopic_values() {
        assert_eq!(polytopic(1, 7), nat(7));
        assert_eq!(polytopic(2, 4), nat(10));
        assert_eq!(polytopic(0, 1), nat(1));
        assert_eq!(polytopic(0, 0), nat(1));
        assert_eq!(polytopic(3, 0), nat(0));
    }

    #[test]
    fn hyper_fib_cumsum_first_generations() {
        let e = Engine::standard();
        assert_eq!(
            e.hyper_fib_cumsum(1, 10).unwrap(),
            row(&[0, 1, 2, 4, 7, 12, 20, 33, 54, 88, 143])
        );
        assert_eq!(
            e.hyper_fib_cumsum(2, 10).unwrap(),
            row(&[0, 1, 3, 7, 14, 26, 46, 79, 133, 221, 364])
        );
        assert_eq!(e.hyper_fib_cumsum(3, 5).unwrap(), row(&[0, 1, 4, 11, 25, 51]));
    }

    #[test]
    fn hyper_lucas_cumsum_first_generations() {
        let e = Engine::standard();
        assert_eq!(
            e.hyper_lucas_cumsum(1, 10).unwrap(),
            row(&[2, 3, 6, 10, 17, 28, 46, 75, 122, 198, 321])
        );
        assert_eq!(
            e.hyper_lucas_cumsum(2, 10).unwrap(),
            row(&[2, 5, 11, 21, 38, 66, 112, 187, 309, 507, 828])
        );
        assert_eq!(e.hyper_lucas_cumsum(3, 1).unwrap(), row(&[2, 7]));
    }

    #[test]
    fn hyper_lucas_initial_values_all_generations() {
        let e = Engine::standard();
        for r in 0..=MAX_GENERATION {
            let row = e.hyper_lucas_cumsum(r, 1).unwrap();
            assert_eq!(row[0], nat(2), "L_0^({r})");
            assert_eq!(row[1], nat(2 * u64::from(r) + 1), "L_1^({r})");
        }
    }

    #[test]
    fn hyper_fib_initial_values_all_generations() {
        let e = Engine::standard();
        for r in 0..=MAX_GENERATION {
            let row = e.hyper_fib_cumsum(r, 1).unwrap();
            assert_eq!(row[0], nat(0), "F_0^({r})");
            assert_eq!(row[1], nat(1), "F_1^({r})");
        }
    }

    #[test]
    fn hyper_fib_rec_values() {
        let e = Engine::standard();
        assert_eq!(e.hyper_fib_rec(1, 4).unwrap(), nat(7));
        assert_eq!(e.hyper_fib_rec(2, 6).unwrap(), nat(46));
        for n in 0..20 {
            assert_eq!(e.hyper_fib_rec(0, n).unwrap(), e.fib(n).unwrap());
        }
    }

    #[test]
    fn hyper_fib_poly_rec_values() {
        let e = Engine::standard();
        assert_eq!(e.hyper_fib_poly_rec(1, 4).unwrap(), row(&[0, 1, 2, 4, 7]));
        assert_eq!(e.hyper_fib_poly_rec(2, 4).unwrap(), row(&[0, 1, 3, 7, 14]));
        assert_eq!(
            e.hyper_fib_poly_rec(0, 6).unwrap(),
            row(&[0, 1, 1, 2, 3, 5, 8])
        );
        assert_eq!(e.hyper_fib_poly_rec(3, 0).unwrap(), row(&[0]));
    }

    #[test]
    fn hyper_fib_closed_values() {
        let e = Engine::standard();
        assert_eq!(e.hyper_fib_closed(1, 9).unwrap(), nat(88));
        assert_eq!(e.hyper_fib_closed(2, 5).unwrap(), nat(26));
        for r in 0..8 {
            assert_eq!(e.hyper_fib_closed(r, 0).unwrap(), nat(0), "F_0^({r})");
        }
    }

    #[test]
    fn hyper_fib_binom_sum_values() {
        let e = Engine::standard();
        assert_eq!(e.hyper_fib_binom_sum(1, 4).unwrap(), nat(7));
        assert_eq!(e.hyper_fib_binom_sum(0, 7).unwrap(), nat(13));
        assert_eq!(e.hyper_fib_binom_sum(2, 4).unwrap(), nat(14));
        assert_eq!(e.hyper_fib_binom_sum(5, 0).unwrap(), nat(0));
    }

    #[test]
    fn hyper_lucas_closed_values() {
        let e = Engine::standard();
        assert_eq!(e.hyper_lucas_closed(1, 2).unwrap(), nat(6));
        assert_eq!(e.hyper_lucas_closed(2, 5).unwrap(), nat(66));
        for n in 1..15 {
            assert_eq!(
                e.hyper_lucas_closed(0, n).unwrap(),
                e.lucas(n).unwrap(),
                "L_{n}"
            );
        }
        assert_eq!(e.hyper_lucas_closed(7, 0).unwrap(), nat(2));
    }

    #[test]
    fn strict_monotonicity() {
        let e = Engine::standard();
        for r in 1..=8 {
            let row = e.hyper_fib_cumsum(r, 60).unwrap();
            for n in 0..60 {
                assert!(row[n] < row[n + 1], "F_{n}^({r}) < F_{}^({r})", n + 1);
            }
        }
        for r in 0..8 {
            let a = e.hyper_fib_cumsum(r, 40).unwrap();
            let b = e.hyper_fib_cumsum(r + 1, 40).unwrap();
            for n in 0..=40usize {
                assert!(a[n] <= b[n]);
                if n > 1 {
                    assert!(a[n] < b[n], "strict above n = 1 at r = {r}, n = {n}");
                } else {
                    assert_eq!(a[n], b[n]);
                }
            }
        }
    }

    #[test]
    fn ratio_gap_examples() {
        let e = Engine::standard();
        let half = (nat(1), nat(2));
        let (ok, gap) = e.ratio_gap_within(0, 2, &half.0, &half.1).unwrap();
        assert!(ok);
        assert_eq!(gap.side, PhiSide::AbovePhi);
        assert_eq!(gap.numerator, nat(2));
        assert_eq!(gap.denominator, nat(1));

        let (ok, gap) = e.ratio_gap_within(1, 1, &half.0, &half.1).unwrap();
        assert!(ok);
        assert_eq!(gap.side, PhiSide::AbovePhi);

        let (ok, _) = e.ratio_gap_within(0, 1, &half.0, &half.1).unwrap();
        assert!(!ok, "|1 - phi| > 1/2");
    }

    #[test]
    fn ratio_gap_domain_errors() {
        let e = Engine::standard();
        assert!(e.ratio_gap_within(0, 0, &nat(1), &nat(2)).is_err());
        assert!(e.ratio_gap_within(0, 2, &nat(1), &nat(0)).is_err());
    }

    #[test]
    fn ratio_side_alternates_for_base_fibonacci() {
        let e = Engine::standard();
        let mut last = None;
        for n in 2..=60 {
            let (_, gap) = e.ratio_gap_within(0, n, &nat(1), &nat(1)).unwrap();
            if let Some(prev) = last {
                assert_ne!(prev, gap.side, "sides must alternate at n = {n}");
            }
            last = Some(gap.side);
        }
    }

    #[test]
    fn parse_eps_accepts_and_rejects() {
        assert_eq!(parse_eps("1/1000000").unwrap(), (nat(1), nat(1000000)));
        assert!(parse_eps("3").is_err());
        assert!(parse_eps("1/0").is_err());
        assert!(parse_eps("x/2").is_err());
    }

    #[test]
    fn nat_decimal_round_trip() {
        let e = Engine::standard();
        let v = e.fib(400).unwrap();
        let s = v.to_string();
        assert_eq!(s.parse::<Nat>().unwrap(), v);
    }

    #[test]
    fn corrupted_engine_doubles_fib() {
        let e = Engine::corrupted_fib_seed();
        let s = Engine::standard();
        for n in 0..20 {
            assert_eq!(e.fib(n).unwrap(), s.fib(n).unwrap() * nat(2));
        }
    }
}
