mod common;

use common::{exhaustive_feasible, minor_rank, scrambled_complex};
use legcob::linalg::{les_feasible, les_feasible_ranges, DimRange, LaurentDims, Z2Matrix};
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = Z2Matrix> {
    (0usize..=10, 0usize..=10, 0u32..=3).prop_flat_map(|(r, c, sparsity)| {
        // sparser matrices reach lower ranks
        proptest::collection::vec(proptest::collection::vec(0u32..=sparsity, c), r).prop_map(move |rows| {
            let rows: Vec<Vec<bool>> = rows.iter().map(|row| row.iter().map(|&x| x == 0).collect()).collect();
            Z2Matrix::from_rows(c, &rows)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_matches_minor_oracle(m in matrix()) {
        prop_assert_eq!(m.rank(), minor_rank(&m));
    }

    #[test]
    fn rank_is_transpose_invariant(m in matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn homology_of_scrambled_complexes(
        singles in proptest::collection::vec((-3i32..=3, 0usize..=3), 0..5),
        pairs in proptest::collection::vec((-3i32..=3, 0usize..=3), 0..5),
        ops in proptest::collection::vec((0usize..8, 0usize..16, 0usize..16), 0..60),
    ) {
        let c = scrambled_complex(&singles, &pairs, &ops);
        prop_assert!(c.validate().is_ok());
        let h = c.homology().unwrap();
        prop_assert_eq!(&h, &LaurentDims::from_pairs(singles.iter().copied()));
        prop_assert_eq!(h.euler_characteristic(), c.chain_dims().euler_characteristic());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn les_matches_exhaustive_search(v in proptest::collection::vec(0usize..=3, 0..=8)) {
        prop_assert_eq!(les_feasible(&v).is_some(), exhaustive_feasible(&v));
        if let Some(ranks) = les_feasible(&v) {
            let mut incoming = 0;
            for (i, &d) in v.iter().enumerate() {
                let out = ranks.get(i).copied().unwrap_or(0);
                prop_assert_eq!(incoming + out, d);
                incoming = out;
            }
        }
        let exact: Vec<DimRange> = v.iter().map(|&d| DimRange::exact(d)).collect();
        prop_assert_eq!(les_feasible_ranges(&exact), exhaustive_feasible(&v));
    }

    #[test]
    fn ranges_match_exhaustive_fill_in(v in proptest::collection::vec(proptest::option::of(0usize..=3), 0..=6)) {
        // unknown entries range over 0..=6, enough to absorb any neighbour
        let ranges: Vec<DimRange> = v.iter().map(|d| d.map_or(DimRange { lo: 0, hi: Some(6) }, DimRange::exact)).collect();
        let unknown: Vec<usize> = (0..v.len()).filter(|&i| v[i].is_none()).collect();
        let mut any = false;
        for fill in 0..7usize.pow(unknown.len() as u32) {
            let mut w: Vec<usize> = v.iter().map(|d| d.unwrap_or(0)).collect();
            let mut f = fill;
            for &i in &unknown {
                w[i] = f % 7;
                f /= 7;
            }
            any |= exhaustive_feasible(&w);
        }
        prop_assert_eq!(les_feasible_ranges(&ranges), any);
    }
}
