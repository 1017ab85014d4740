//! Monomial counts, closed-form bounds and the rank report.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::scalar::{binomial, factorial};
use crate::strata::{sigma_dim_det, sigma_dim_monomial, sigma_dim_perm_lb};

/// A bound value with the statement it comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub value: u64,
    pub provenance: String,
}

impl Bound {
    pub fn new(value: u64, provenance: impl Into<String>) -> Self {
        Bound {
            value,
            provenance: provenance.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    RankLower,
    RankUpper,
    BorderLower,
    BorderUpper,
}

/// Best known value of one bound, with every source attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundValue {
    pub value: u64,
    pub provenance: Vec<String>,
}

/// Accumulated bounds on R(φ) and R̲(φ).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub poly_id: String,
    pub rank_lower: BoundValue,
    pub rank_upper: BoundValue,
    pub border_lower: BoundValue,
    pub border_upper: BoundValue,
    pub exact_rank: Option<u64>,
    pub exact_border: Option<u64>,
    /// Every contribution in the order it arrived.
    pub contributions: Vec<(BoundKind, Bound)>,
    pub notes: Vec<String>,
}

fn merge(slot: &mut BoundValue, b: &Bound, better: fn(u64, u64) -> bool) {
    if better(b.value, slot.value) {
        slot.value = b.value;
        slot.provenance = vec![b.provenance.clone()];
    } else if b.value == slot.value && !slot.provenance.contains(&b.provenance) {
        slot.provenance.push(b.provenance.clone());
    }
}

impl RankReport {
    /// Starts from the trivial bounds 0 ≤ R̲ ≤ R ≤ ∞.
    pub fn new(poly_id: impl Into<String>) -> Self {
        let lo = BoundValue {
            value: 0,
            provenance: vec![String::from("trivial")],
        };
        let hi = BoundValue {
            value: u64::MAX,
            provenance: vec![String::from("trivial")],
        };
        RankReport {
            poly_id: poly_id.into(),
            rank_lower: lo.clone(),
            rank_upper: hi.clone(),
            border_lower: lo,
            border_upper: hi,
            exact_rank: None,
            exact_border: None,
            contributions: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Record a bound. Border lower bounds are rank lower bounds and rank
    /// upper bounds are border upper bounds.
    pub fn add(&mut self, kind: BoundKind, b: Bound) {
        let gt = |a: u64, c: u64| a > c;
        let lt = |a: u64, c: u64| a < c;
        match kind {
            BoundKind::RankLower => merge(&mut self.rank_lower, &b, gt),
            BoundKind::RankUpper => {
                merge(&mut self.rank_upper, &b, lt);
                merge(&mut self.border_upper, &b, lt);
            }
            BoundKind::BorderLower => {
                merge(&mut self.border_lower, &b, gt);
                merge(&mut self.rank_lower, &b, gt);
            }
            BoundKind::BorderUpper => merge(&mut self.border_upper, &b, lt),
        }
        self.contributions.push((kind, b));
        self.refresh();
    }

    pub fn add_all(&mut self, kind: BoundKind, bs: impl IntoIterator<Item = Bound>) {
        for b in bs {
            self.add(kind, b);
        }
    }

    /// Pin an exact rank: both rank bounds at once.
    pub fn pin_rank(&mut self, value: u64, provenance: &str) {
        self.add(BoundKind::RankLower, Bound::new(value, provenance));
        self.add(BoundKind::RankUpper, Bound::new(value, provenance));
    }

    pub fn pin_border(&mut self, value: u64, provenance: &str) {
        self.add(BoundKind::BorderLower, Bound::new(value, provenance));
        self.add(BoundKind::BorderUpper, Bound::new(value, provenance));
    }

    fn refresh(&mut self) {
        self.exact_rank =
            (self.rank_lower.value == self.rank_upper.value).then_some(self.rank_lower.value);
        self.exact_border =
            (self.border_lower.value == self.border_upper.value).then_some(self.border_lower.value);
    }

    /// border_lower ≤ border_upper, rank_lower ≤ rank_upper, border_lower ≤ rank_upper.
    pub fn is_consistent(&self) -> bool {
        self.border_lower.value <= self.border_upper.value
            && self.rank_lower.value <= self.rank_upper.value
            && self.border_lower.value <= self.rank_upper.value
    }
}

fn big_to_u64(x: &BigInt) -> u64 {
    x.to_u64().expect("count fits in u64")
}

/// Number of tuples 0 ≤ aⱼ ≤ bⱼ with Σ aⱼ = δ, by inclusion-exclusion:
/// S = Σ_I (−1)^{|I|} C(δ + m − |I| − Σ_I bᵢ, m) where m + 1 = len(b).
pub fn count_s(b: &[u32], delta: u32) -> u64 {
    count_s_range(b, delta, delta)[0]
}

/// S_{b,δ} for δ = 0, …, Σ bᵢ.
pub fn count_s_all(b: &[u32]) -> Vec<u64> {
    count_s_range(b, 0, b.iter().sum())
}

fn count_s_range(b: &[u32], lo: u32, hi: u32) -> Vec<u64> {
    let len = b.len();
    if len == 0 {
        return (lo..=hi).map(|d| u64::from(d == 0)).collect();
    }
    assert!(len < 32, "inclusion-exclusion over {len} exponents");
    let m = len - 1;
    // subset sums, each mask extending the one without its lowest bit
    let mut sums = vec![0u64; 1 << len];
    for mask in 1usize..(1 << len) {
        let low = mask.trailing_zeros() as usize;
        sums[mask] = sums[mask & (mask - 1)] + b[low] as u64;
    }
    let top = hi as usize + m;
    match small_binomials(top, m) {
        Some(table) => (lo..=hi)
            .map(|d| {
                inclusion_exclusion(&sums, d as u64, m, &table)
                    .unwrap_or_else(|| inclusion_exclusion_big(&sums, d as u64, m))
            })
            .collect(),
        None => (lo..=hi)
            .map(|d| inclusion_exclusion_big(&sums, d as u64, m))
            .collect(),
    }
}

/// C(x, m) for x = 0, …, top, or `None` on overflow.
fn small_binomials(top: usize, m: usize) -> Option<Vec<i128>> {
    let mut t = vec![0i128; top + 1];
    if m <= top {
        t[m] = 1;
    }
    for x in m + 1..=top {
        // C(x, m) = C(x−1, m)·x/(x−m)
        t[x] = t[x - 1].checked_mul(x as i128)? / (x - m) as i128;
    }
    Some(t)
}

/// `None` when an intermediate sum overflows.
fn inclusion_exclusion(sums: &[u64], delta: u64, m: usize, table: &[i128]) -> Option<u64> {
    let mut total: i128 = 0;
    for (mask, &sum) in sums.iter().enumerate() {
        let k = mask.count_ones() as u64;
        let Some(x) = (delta + m as u64).checked_sub(k + sum) else {
            continue;
        };
        let c = table[x as usize];
        total = if k.is_multiple_of(2) {
            total.checked_add(c)?
        } else {
            total.checked_sub(c)?
        };
    }
    u64::try_from(total).ok()
}

fn inclusion_exclusion_big(sums: &[u64], delta: u64, m: usize) -> u64 {
    let mut total = BigInt::zero();
    for (mask, &sum) in sums.iter().enumerate() {
        let k = mask.count_ones() as u64;
        let Some(x) = (delta + m as u64).checked_sub(k + sum) else {
            continue;
        };
        let c = binomial(x as i64, m as i64);
        if k.is_multiple_of(2) {
            total += c;
        } else {
            total -= c;
        }
    }
    big_to_u64(&total)
}

/// Brute-force enumeration of the same count.
pub fn count_s_bruteforce(b: &[u32], delta: u32) -> u64 {
    fn rec(b: &[u32], left: u32) -> u64 {
        match b.split_first() {
            None => u64::from(left == 0),
            Some((&first, rest)) => (0..=first.min(left)).map(|a| rec(rest, left - a)).sum(),
        }
    }
    rec(b, delta)
}

/// Histogram of Σ aⱼ over every tuple 0 ≤ aⱼ ≤ bⱼ, by enumeration.
pub fn count_s_histogram_bruteforce(b: &[u32]) -> Vec<u64> {
    let mut hist = vec![0u64; b.iter().sum::<u32>() as usize + 1];
    let mut a = vec![0u32; b.len()];
    let mut sum = 0usize;
    loop {
        hist[sum] += 1;
        // odometer step
        let mut i = 0;
        loop {
            if i == b.len() {
                return hist;
            }
            if a[i] < b[i] {
                a[i] += 1;
                sum += 1;
                break;
            }
            sum -= a[i] as usize;
            a[i] = 0;
            i += 1;
        }
    }
}

/// T_b = ∏(1 + bᵢ).
pub fn count_t(b: &[u32]) -> u64 {
    b.iter().map(|&x| 1 + x as u64).product()
}

fn sorted_desc(b: &[u32]) -> Vec<u32> {
    let mut v: Vec<u32> = b.iter().copied().filter(|&x| x > 0).collect();
    v.sort_unstable_by(|a, c| c.cmp(a));
    v
}

/// Border-rank bounds for x₀^{b₀}⋯xₙ^{bₙ}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBounds {
    pub exponents: Vec<u32>,
    pub border_lower: u64,
    pub border_upper: u64,
    pub exact_border: Option<u64>,
    pub rank_lower: u64,
    pub rank_upper: u64,
}

/// S_{b,⌊d/2⌋} ≤ R̲ ≤ T_{(b₁,…,bₙ)}, exact when b₀ ≥ b₁ + ⋯ + bₙ. Rank bounds
/// come from the singular strata and the product count.
pub fn monomial_border_bounds(b: &[u32]) -> MonomialBounds {
    let e = sorted_desc(b);
    let d: u32 = e.iter().sum();
    let lower = count_s(&e, d / 2);
    let upper = if e.is_empty() { 1 } else { count_t(&e[1..]) };
    let tail: u32 = e.iter().skip(1).sum();
    let exact = (!e.is_empty() && e[0] >= tail).then_some(upper);
    let mut rank_lower = lower;
    for s in 1..d {
        let r = count_s(&e, s.min(d - s));
        let st = sigma_dim_monomial(&e, s);
        rank_lower = rank_lower.max((r as i64 + st.dim + 1).max(0) as u64);
    }
    MonomialBounds {
        exponents: e.clone(),
        border_lower: exact.unwrap_or(lower),
        border_upper: upper,
        exact_border: exact,
        rank_lower,
        rank_upper: monomial_rank_upper(&e),
    }
}

/// (b₀+1)⋯(b_{n−1}+1)·bₙ for sorted exponents; a pure power has rank 1.
pub fn monomial_rank_upper(b: &[u32]) -> u64 {
    let e = sorted_desc(b);
    match e.split_last() {
        None => 0,
        Some(_) if e.len() == 1 => 1,
        Some((&last, init)) => count_t(init) * last as u64,
    }
}

/// Bounds for x₁⋯xₙ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductBounds {
    pub n: u32,
    pub rank_lower: u64,
    pub rank_upper: u64,
    pub border_lower: u64,
    pub exact_rank: Option<u64>,
}

pub const PRODUCT_FOUR_RANK: u64 = 8;

/// C(n,⌊n/2⌋) + ⌈n/2⌉ − 1 ≤ R(x₁⋯xₙ) ≤ 2^{n−1}, R̲ ≥ C(n,⌊n/2⌋).
pub fn product_bounds(n: u32) -> ProductBounds {
    let c = big_to_u64(&binomial(n as i64, (n / 2) as i64));
    let rank_lower = c + n.div_ceil(2) as u64 - 1;
    let rank_upper = 1u64 << (n.max(1) - 1);
    let exact_rank = if n == 4 {
        Some(PRODUCT_FOUR_RANK)
    } else {
        (rank_lower == rank_upper).then_some(rank_upper)
    };
    ProductBounds {
        n,
        rank_lower,
        rank_upper,
        border_lower: c,
        exact_rank,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetPerm {
    Det,
    Perm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetPermBounds {
    pub n: u32,
    pub kind: DetPerm,
    pub rank_upper: u64,
    pub rank_lower: u64,
    pub border_lower: u64,
}

/// Upper bounds 2^{n−1}n! and 4^{n−1}.
pub fn gurvits_upper(n: u32, kind: DetPerm) -> u64 {
    match kind {
        DetPerm::Det => (1u64 << (n - 1)) * big_to_u64(&factorial(n)),
        DetPerm::Perm => 1u64 << (2 * (n - 1)),
    }
}

/// Flattening, singular-stratum and product-identity bounds for det_n or per_n.
pub fn detperm_bounds(n: u32, kind: DetPerm) -> DetPermBounds {
    let c = |a: u32| big_to_u64(&binomial(n as i64, a as i64)).pow(2);
    let mut rank_lower = 0;
    for a in 1..n {
        let st = match kind {
            DetPerm::Det => sigma_dim_det(n, a),
            DetPerm::Perm => sigma_dim_perm_lb(n, a),
        }
        .expect("a in range");
        rank_lower = rank_lower.max((c(a) as i64 + st.dim + 1) as u64);
    }
    DetPermBounds {
        n,
        kind,
        rank_upper: gurvits_upper(n, kind),
        rank_lower,
        border_lower: c(n / 2),
    }
}

/// Human-readable statement of the open question on border rank three.
pub const BORDER_THREE_OPEN_QUESTION: &str = "For border rank 3 forms the ranks lie in [d−1, 2d−1] and only three \
values occur, one of which is d−1; the normal-form table lists lower bound d for the non-Fermat rows. Both \
statements are reported without reconciliation.";

pub fn describe(kind: BoundKind) -> &'static str {
    match kind {
        BoundKind::RankLower => "rank_lower",
        BoundKind::RankUpper => "rank_upper",
        BoundKind::BorderLower => "border_lower",
        BoundKind::BorderUpper => "border_upper",
    }
}

pub fn fmt_value(v: u64) -> String {
    if v == u64::MAX {
        String::from("inf")
    } else {
        format!("{v}")
    }
}
