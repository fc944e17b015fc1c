use num_bigint::BigUint;
use polyfault::enumeration::{count_domino_dp, count_faultfree_dp, count_tromino_dp, random_tiling};
use polyfault::fault::{crossing_numbers, crossing_profile, fault_lines, is_faultfree};
use polyfault::monodic::{from_monodic, stretch, to_monodic, unstretch, Colour, Stretch};
use polyfault::{Rect, Tiling};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

/// Rectangles with at most `limit` cells that have at least one tiling.
fn tileable(limit: usize) -> Vec<Rect> {
    let mut out = Vec::new();
    for m in 2..=limit / 2 {
        for n in 2..=limit / m {
            let r = Rect::new(m, n).unwrap();
            if r.tromino_tileable() && count_tromino_dp(r) > BigUint::default() {
                out.push(r);
            }
        }
    }
    out
}

fn tilings() -> impl Strategy<Value = Tiling> {
    (proptest::sample::select(tileable(60)), any::<u64>())
        .prop_map(|(r, seed)| random_tiling(r, &mut StdRng::seed_from_u64(seed)).expect("tileable rectangle"))
}

fn small_rects() -> impl Strategy<Value = Rect> {
    (1usize..=9, 1usize..=9).prop_map(|(m, n)| Rect::new(m, n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn every_cell_covered_once(t in tilings()) {
        let r = t.rect();
        prop_assert_eq!(t.pieces().len(), r.area() / 3);
        let owners = t.owner_grid();
        prop_assert_eq!(owners.len(), r.area());
        prop_assert!(owners.iter().all(|&o| o < t.pieces().len()));
    }

    #[test]
    fn json_is_stable(t in tilings()) {
        let text = t.to_json();
        let back = Tiling::from_json(&text).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(back.to_json(), text);
    }

    #[test]
    fn symmetries_are_involutions(t in tilings()) {
        prop_assert_eq!(t.transpose().transpose(), t.clone());
        prop_assert_eq!(t.flip().flip(), t.clone());
        prop_assert_eq!(t.mirror().mirror(), t.clone());
        let tt = t.transpose();
        prop_assert_eq!(Tiling::new(tt.rect(), tt.pieces().to_vec()).unwrap(), tt);
    }

    #[test]
    fn crossings_are_conserved(t in tilings()) {
        let p = crossing_profile(&t);
        let third = t.rect().area() / 3;
        prop_assert_eq!(p.horizontal.iter().sum::<usize>(), third);
        prop_assert_eq!(p.vertical.iter().sum::<usize>(), third);
    }

    #[test]
    fn profiles_follow_symmetries(t in tilings()) {
        let p = crossing_profile(&t);
        let mut reversed = p.horizontal.clone();
        reversed.reverse();
        prop_assert_eq!(crossing_profile(&t.flip()).horizontal, reversed);
        let q = crossing_profile(&t.transpose());
        prop_assert_eq!(&q.horizontal, &p.vertical);
        prop_assert_eq!(&q.vertical, &p.horizontal);
    }

    #[test]
    fn faultfree_iff_no_zero_line(t in tilings()) {
        let cn = crossing_numbers(&t);
        let ff = is_faultfree(&t);
        prop_assert_eq!(ff, fault_lines(&t).is_empty());
        prop_assert_eq!(ff, cn.horizontal_cn >= 1 && cn.vertical_cn >= 1);
    }

    #[test]
    fn monodic_round_trips(t in tilings()) {
        let mt = to_monodic(&t);
        prop_assert_eq!(mt.dominoes().len(), t.pieces().len());
        prop_assert_eq!(mt.monominoes().len(), t.pieces().len());
        prop_assert_eq!(from_monodic(&mt).unwrap(), t.clone());
        for dir in [Stretch::Horizontal, Stretch::Vertical] {
            let cd = stretch(&mt, dir);
            prop_assert_eq!(cd.count(Colour::Blue), t.pieces().len());
            prop_assert_eq!(cd.count(Colour::Red), 2 * t.pieces().len());
            prop_assert_eq!(unstretch(&cd, dir).unwrap(), mt.clone());
        }
    }

    #[test]
    fn counters_are_transpose_symmetric(r in small_rects()) {
        prop_assume!(r.area() <= 45);
        let t = r.transposed();
        prop_assert_eq!(count_tromino_dp(r), count_tromino_dp(t));
        prop_assert_eq!(count_faultfree_dp(r), count_faultfree_dp(t));
        prop_assert_eq!(count_domino_dp(r), count_domino_dp(t));
    }

    #[test]
    fn faultfree_never_exceeds_all(r in small_rects()) {
        prop_assert!(count_faultfree_dp(r) <= count_tromino_dp(r));
    }

    #[test]
    fn tileable_needs_area_and_width(r in small_rects()) {
        if r.tromino_tileable() {
            prop_assert!(r.area() % 3 == 0 && r.rows().min(r.cols()) >= 2);
        }
        if count_tromino_dp(r) > BigUint::default() {
            prop_assert!(r.tromino_tileable());
        }
    }
}
