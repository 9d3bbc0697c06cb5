use std::collections::HashSet;

use num_traits::Zero;
use proptest::prelude::*;

use pretzel::bicolor::{bracelet_bicolor_count, h_bicolor, BicolorParams};
use pretzel::count::{count_row, omega_set, p1_count, p2_count, p3_count};
use pretzel::necklace::{bracelet_count, necklace_count, NkParams};
use pretzel::tcode::{canonicalize, least_rotation, Family, LinkType, Oracle, Symmetry, TCode};
use pretzel::Count;

#[test]
fn single_colour_counts_match_orbits() {
    let oracle = Oracle::default();
    for n in 1..=18 {
        for k in 1..=n {
            let fam = Family::Compositions { n, k };
            let p = NkParams::new(n, k);
            assert_eq!(necklace_count(p), oracle.orbit_count(fam, Symmetry::Cyclic).unwrap(), "N({n},{k})");
            assert_eq!(bracelet_count(p), oracle.orbit_count(fam, Symmetry::Dihedral).unwrap(), "B({n},{k})");
        }
    }
}

/// `2h` by brute force: reflection-fixed tuples of the family divided by `k`.
fn doubled_reflection_term(fam: Family, k: usize) -> Count {
    let mut tuples = Vec::new();
    match fam {
        Family::Bicolor(p) => {
            let pos: Vec<Vec<u64>> = pretzel::combinat::compositions(p.n1, p.k1 as usize).collect();
            let neg: Vec<Vec<u64>> = pretzel::combinat::compositions(p.n2, p.k2 as usize).collect();
            for mask in 0u32..(1 << k) {
                if mask.count_ones() as u64 != p.k1 {
                    continue;
                }
                for a in &pos {
                    for b in &neg {
                        let (mut ia, mut ib) = (0, 0);
                        let t: Vec<i64> = (0..k)
                            .map(|s| {
                                if mask & (1 << s) != 0 {
                                    ia += 1;
                                    a[ia - 1] as i64
                                } else {
                                    ib += 1;
                                    -(b[ib - 1] as i64)
                                }
                            })
                            .collect();
                        tuples.push(t);
                    }
                }
            }
        }
        Family::Compositions { .. } => unreachable!(),
    }
    // Reflections of a k-gon: i -> (r - i) mod k for r in 0..k.
    let mut fixed = 0u64;
    for t in &tuples {
        for r in 0..k {
            if (0..k).all(|i| t[i] == t[(r + k - i) % k]) {
                fixed += 1;
            }
        }
    }
    // h = fixed / (2k), so 2h = fixed / k.
    assert_eq!(fixed % k as u64, 0);
    Count::from(fixed / k as u64)
}

#[test]
fn bicolor_counts_match_orbits() {
    let oracle = Oracle::default();
    let mut checked = 0;
    for k1 in 0..=7u64 {
        for k2 in 0..=7 - k1 {
            if k1 + k2 == 0 {
                continue;
            }
            for n1 in k1..=9 {
                for n2 in k2..=9 {
                    let Ok(p) = BicolorParams::new(n1, k1, n2, k2) else { continue };
                    let fam = Family::Bicolor(p);
                    let orbits = oracle.orbit_count(fam, Symmetry::Dihedral).unwrap();
                    assert_eq!(bracelet_bicolor_count(p), orbits, "{p:?}");
                    if k1 > 0 && k2 > 0 {
                        let k = (k1 + k2) as usize;
                        assert_eq!(h_bicolor(p).unwrap(), doubled_reflection_term(fam, k), "h at {p:?}");
                    }
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 500);
}

#[test]
fn every_parity_branch_is_exercised() {
    // (k1, k2, n1, n2) parities, each checked against orbits above; make
    // sure the sweep really hits all sixteen patterns.
    let mut seen = HashSet::new();
    for k1 in 1..=6u64 {
        for k2 in 1..=7 - k1 {
            for n1 in k1..=9 {
                for n2 in k2..=9 {
                    seen.insert((k1 % 2, k2 % 2, n1 % 2, n2 % 2));
                }
            }
        }
    }
    assert_eq!(seen.len(), 16);
}

#[test]
fn integrality_over_large_omega() {
    // Exact-division assertions inside the counters panic if they fail.
    for c in 1..=60 {
        for q in omega_set(c) {
            bracelet_bicolor_count(q.bicolor());
        }
    }
}

#[test]
fn omega_members_satisfy_invariants() {
    for c in 1..=40 {
        let set = omega_set(c);
        let unique: HashSet<_> = set.iter().collect();
        assert_eq!(unique.len(), set.len());
        for q in &set {
            assert!(q.n1 >= q.k1 && q.n2 >= q.k2);
            assert_eq!(q.delta + q.k1 + q.n1 + 2 * q.n2, c);
            assert!(q.delta + q.k1 >= 2 && (q.delta + q.k1) % 2 == 0);
            assert!(q.k1 + q.k2 >= 3);
        }
        assert!(set.windows(2).all(|w| {
            (w[0].delta, w[0].k1, w[0].n1, w[0].k2, w[0].n2) < (w[1].delta, w[1].k1, w[1].n1, w[1].k2, w[1].n2)
        }));
    }
}

#[test]
fn enumerated_classes_are_valid_and_counted() {
    let oracle = Oracle::default();
    for c in 1..=16 {
        for t in LinkType::ALL {
            let classes = oracle.enumerate_classes(c, t).unwrap();
            for code in &classes {
                assert!(code.is_valid(), "{code}");
                assert_eq!(code.crossing_number().unwrap(), c);
                assert_eq!(&canonicalize(code).unwrap(), code);
            }
            let formula = match t {
                LinkType::Type1 => p1_count(c),
                LinkType::Type2 => p2_count(c),
                LinkType::Type3 => p3_count(c),
            };
            assert_eq!(Count::from(classes.len()), formula, "c={c} {t}");
        }
    }
}

#[test]
fn rows_are_identical_across_threads() {
    let sequential: Vec<_> = (1..=50).map(count_row).collect();
    let parallel: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = (1..=50).map(|c| s.spawn(move || count_row(c))).collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    assert_eq!(sequential, parallel);
}

#[test]
fn low_crossing_counts_vanish() {
    for c in 1..=5 {
        let row = count_row(c);
        assert!(row.p.is_zero() && row.total.is_zero());
    }
    assert!(p3_count(5).is_zero());
    assert!(!p3_count(6).is_zero());
}

fn type3_code() -> impl Strategy<Value = TCode> {
    let strip = prop_oneof![(2i64..8), (1i64..4).prop_map(|x| -2 * x)];
    (prop::collection::vec(strip, 3..8), 0u64..5).prop_map(|(strips, d)| {
        let positives = strips.iter().filter(|&&s| s > 0).count() as u64;
        // Adjust δ so δ + positives is even and at least 2.
        let mut delta = d;
        if (delta + positives) % 2 == 1 {
            delta += 1;
        }
        if delta + positives < 2 {
            delta += 2;
        }
        TCode::new(LinkType::Type3, delta, strips)
    })
}

fn type1_code() -> impl Strategy<Value = TCode> {
    (prop::collection::vec((1i64..6).prop_map(|a| 2 * a + 1), 3..8), 0u64..5)
        .prop_map(|(strips, delta)| TCode::new(LinkType::Type1, delta, strips))
}

proptest! {
    #[test]
    fn canonical_form_is_idempotent_and_orbit_invariant(code in prop_oneof![type1_code(), type3_code()], shift in 0usize..8, flip: bool) {
        prop_assert!(code.is_valid());
        let canon = canonicalize(&code).unwrap();
        prop_assert_eq!(&canonicalize(&canon).unwrap(), &canon);

        let k = code.strips.len();
        let mut moved = code.strips.clone();
        moved.rotate_left(shift % k);
        let reflective = code.link_type != LinkType::Type1;
        if flip && reflective {
            moved.reverse();
        }
        let other = TCode::new(code.link_type, code.delta, moved);
        prop_assert_eq!(canonicalize(&other).unwrap(), canon.clone());
        prop_assert_eq!(canon.crossing_number().unwrap(), code.crossing_number().unwrap());
    }

    #[test]
    fn least_rotation_is_minimal(seq in prop::collection::vec(-5i64..6, 1..9), reflect: bool) {
        let best = least_rotation(&seq, reflect);
        let k = seq.len();
        let mut rev = seq.clone();
        rev.reverse();
        for s in 0..k {
            let mut r = seq.clone();
            r.rotate_left(s);
            prop_assert!(best <= r);
            if reflect {
                let mut r = rev.clone();
                r.rotate_left(s);
                prop_assert!(best <= r);
            }
        }
    }

    #[test]
    fn tcode_text_round_trips(code in prop_oneof![type1_code(), type3_code()]) {
        let text = code.to_string();
        prop_assert!(!text.contains(' '));
        prop_assert_eq!(text.parse::<TCode>().unwrap(), code);
    }

    #[test]
    fn colour_swap_symmetry(k1 in 0u64..6, k2 in 0u64..6, e1 in 0u64..12, e2 in 0u64..12) {
        let n1 = if k1 == 0 { 0 } else { k1 + e1 };
        let n2 = if k2 == 0 { 0 } else { k2 + e2 };
        let p = BicolorParams::new(n1, k1, n2, k2).unwrap();
        prop_assert_eq!(bracelet_bicolor_count(p), bracelet_bicolor_count(p.swapped()));
    }
}
