/// Decides whether `v` can be the dimension sequence of an exact sequence
/// `0 → V_0 → V_1 → ... → V_{m-1} → 0` and returns the ranks of the `m - 1`
/// interior maps when it can.
///
/// Exactness forces `dim V_i = r_{i-1} + r_i` with zero rank on both flanking
/// maps, so the ranks are determined front to back by `r_i = v_i - r_{i-1}`.
pub fn les_feasible(v: &[usize]) -> Option<Vec<usize>> {
    let mut ranks = Vec::with_capacity(v.len().saturating_sub(1));
    let mut incoming = 0usize;
    for &dim in v {
        let outgoing = dim.checked_sub(incoming)?;
        ranks.push(outgoing);
        incoming = outgoing;
    }
    // the map out of the last term lands in 0
    match ranks.pop() {
        None | Some(0) => Some(ranks),
        Some(_) => None,
    }
}

/// An entry of a candidate exact sequence whose dimension is only known to
/// lie in `lo..=hi` (`hi = None` for unbounded).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimRange {
    pub lo: usize,
    pub hi: Option<usize>,
}

impl DimRange {
    pub fn exact(d: usize) -> Self {
        DimRange { lo: d, hi: Some(d) }
    }

    pub fn unbounded() -> Self {
        DimRange { lo: 0, hi: None }
    }
}

/// Feasibility when some dimensions are unknown. The set of attainable ranks
/// after each term is an interval, so it is propagated as one.
pub fn les_feasible_ranges(v: &[DimRange]) -> bool {
    // attainable values of the rank of the map leaving the previous term
    let (mut lo, mut hi): (usize, Option<usize>) = (0, Some(0));
    for d in v {
        // r_i = dim - r_{i-1} over dim in [d.lo, d.hi], r_{i-1} in [lo, hi]
        let new_lo = match hi {
            Some(h) => d.lo.saturating_sub(h),
            None => 0,
        };
        let new_hi = match d.hi {
            Some(dh) => match dh.checked_sub(lo) {
                Some(x) => Some(x),
                None => return false,
            },
            None => None,
        };
        if let Some(h) = new_hi {
            if h < new_lo {
                return false;
            }
        }
        lo = new_lo;
        hi = new_hi;
    }
    lo == 0
}
