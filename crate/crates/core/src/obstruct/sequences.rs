use serde::Serialize;

use super::ObstructError;
use crate::linalg::{les_feasible, les_feasible_ranges, DimRange, LaurentDims};

/// Genus of a connected orientable cobordism between two Legendrian knots
/// forced by their Thurston–Bennequin invariants: `tb₊ − tb₋ = 2g`.
/// `None` when no genus fits, which already rules the cobordism out.
pub fn genus_constraint(tb_minus: i64, tb_plus: i64, n: u32) -> Result<Option<u64>, ObstructError> {
    if n != 1 {
        return Err(ObstructError::NotAKnot(n));
    }
    let diff = tb_plus - tb_minus;
    Ok((diff >= 0 && diff % 2 == 0).then_some((diff / 2) as u64))
}

/// `H^*(L, Λ₊)` of a connected orientable genus `g` cobordism between knots:
/// only `H^1`, of rank `2g`.
pub fn knot_cobordism_relative_cohomology(genus: u64) -> LaurentDims {
    LaurentDims::monomial(1, 2 * genus as usize)
}

/// `H^*(L, ∂L)` of a once-punctured genus `g` surface: `H^1` of rank `2g`
/// and `H^2` of rank 1.
pub fn filling_relative_cohomology(genus: u64) -> LaurentDims {
    LaurentDims::from_pairs([(1, 2 * genus as usize), (2, 1)])
}

/// Betti numbers of a circle.
pub fn knot_betti() -> LaurentDims {
    LaurentDims::from_pairs([(0, 1), (1, 1)])
}

/// Betti numbers of the `n`-sphere.
pub fn sphere_betti(n: u32) -> LaurentDims {
    LaurentDims::from_pairs([(0, 1), (n as i32, 1)])
}

fn support(polys: &[&LaurentDims]) -> (i32, i32) {
    let lo = polys.iter().filter_map(|p| p.min_degree()).min().unwrap_or(0);
    let hi = polys.iter().filter_map(|p| p.max_degree()).max().unwrap_or(0);
    (lo, hi)
}

fn cobordism_window(p_minus: &LaurentDims, p_plus: &LaurentDims, h_rel: &LaurentDims, n: i32) -> (i32, i32) {
    let (lo, hi) = support(&[p_minus, p_plus, h_rel]);
    (lo.min(0) - 1, hi.max(n + 1) + 1)
}

/// Splices `… → H^k(L,Λ₊) → GH^k(f₋) → GH^k(f₊) → H^{k+1}(L,Λ₊) → …` into
/// one dimension sequence and decides whether it can be exact. Returns the
/// ranks of the maps when it can.
pub fn cobordism_les_check(p_minus: &LaurentDims, p_plus: &LaurentDims, h_rel: &LaurentDims) -> Option<Vec<usize>> {
    let (lo, hi) = cobordism_window(p_minus, p_plus, h_rel, 1);
    let mut v = Vec::new();
    for k in lo..=hi {
        v.extend([h_rel.get(k), p_minus.get(k), p_plus.get(k)]);
    }
    v.push(h_rel.get(hi + 1));
    les_feasible(&v)
}

/// The same sequence when the topology of the `n + 1`-dimensional cobordism
/// is unknown: `H^k(L,Λ₊)` vanishes for `k ≤ 0` (connected, `Λ₊` nonempty)
/// and for `k ≥ n + 1` (`Λ₋` nonempty) and is unconstrained in between.
pub fn cobordism_les_check_unknown_topology(p_minus: &LaurentDims, p_plus: &LaurentDims, n: u32) -> bool {
    let n = n as i32;
    let (lo, hi) = cobordism_window(p_minus, p_plus, &LaurentDims::zero(), n);
    let h = |k: i32| if (1..=n).contains(&k) { DimRange::unbounded() } else { DimRange::exact(0) };
    let mut v = Vec::new();
    for k in lo..=hi {
        v.extend([h(k), DimRange::exact(p_minus.get(k)), DimRange::exact(p_plus.get(k))]);
    }
    v.push(h(hi + 1));
    les_feasible_ranges(&v)
}

/// Splices `… → GH^{k−1}(f) → GH_{n−k}(f) → H^k(Λ) → GH^k(f) → …`. Over a
/// field `GH_j` and `GH^j` have equal rank, so both come from `p`.
pub fn duality_feasible(p: &LaurentDims, n: u32, betti: &LaurentDims) -> Option<Vec<usize>> {
    let n = n as i32;
    let (plo, phi) = support(&[p]);
    let (blo, bhi) = support(&[betti]);
    let lo = (plo + 1).min(n - phi).min(blo) - 1;
    let hi = (phi + 1).max(n - plo).max(bhi) + 1;
    let mut v = Vec::new();
    for k in lo..=hi {
        v.extend([p.get(k - 1), p.get(n - k), betti.get(k)]);
    }
    les_feasible(&v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArnoldMargin {
    pub i: i32,
    /// `r_i + r_{n−i} − b_i`.
    pub margin: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArnoldReport {
    pub pass: bool,
    pub margins: Vec<ArnoldMargin>,
}

/// Reeb chord lower bound `r_i + r_{n−i} ≥ b_i` for `0 ≤ i ≤ n`.
pub fn arnold_check(chords: &LaurentDims, n: u32, betti: &LaurentDims) -> ArnoldReport {
    let n = n as i32;
    let margins: Vec<ArnoldMargin> = (0..=n)
        .map(|i| ArnoldMargin { i, margin: (chords.get(i) + chords.get(n - i)) as i64 - betti.get(i) as i64 })
        .collect();
    ArnoldReport { pass: margins.iter().all(|m| m.margin >= 0), margins }
}
