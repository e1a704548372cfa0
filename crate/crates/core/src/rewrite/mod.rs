//! Move generation and bounded equivalence search: Reidemeister moves on
//! Gauss codes, graphene moves realized through K, and region flips.

mod canon;
mod graphene;
mod moves;
mod search;

pub use canon::{canonical_code, canonical_key, code_from_key, CanonKey};
pub use graphene::{cut_size, flip_region, graphene_move, round_trip_code, round_trip_graph, GrapheneMove};
pub use moves::{apply, reidemeister_neighbors, MoveTrace, RMove};
pub use search::{equivalent_within, Budget, SearchResult};

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::error::Error;
    use crate::fixtures;
    use crate::functor::{k_inverse, k_map};
    use crate::gauss::GaussCode;
    use crate::homology::{baldridge_homology, khovanov_z2_with, BifurcationPolicy, MAX_CROSSINGS};
    use crate::invariants::{jones, kauffman_bracket, normalized_binary};
    use crate::matched::{MatchedGraph, Sign};
    use crate::surface::genus;

    fn gc(s: &str) -> GaussCode {
        GaussCode::parse(s).unwrap()
    }

    fn mg(s: &str) -> MatchedGraph {
        MatchedGraph::parse(s).unwrap()
    }

    #[test]
    fn unknot_one_crossing_neighbors_are_kinks() {
        let ns = reidemeister_neighbors(&gc(fixtures::UNKNOT0));
        assert!(ns.iter().all(|(_, m)| matches!(m, RMove::R1Add { .. } | RMove::R2Add { .. })));
        let mut small: Vec<String> =
            ns.iter().filter(|(c, _)| c.crossing_count() == 1).map(|(c, _)| canonical_code(c)).collect();
        small.sort();
        small.dedup();
        assert_eq!(small, ["component: O1+ U1+\n", "component: O1- U1-\n"]);
    }

    #[test]
    fn r2_pair_is_removed() {
        let d = gc("component: O1+ O2- U3+ O3+\ncomponent: U1+ U2-\n");
        let target = canonical_code(&gc("component: U3+ O3+\ncomponent:\n"));
        assert!(reidemeister_neighbors(&d).iter().any(|(c, _)| canonical_code(c) == target));
    }

    #[test]
    fn trefoil_never_unknots_in_one_move() {
        assert!(reidemeister_neighbors(&gc(fixtures::TREFOIL)).iter().all(|(c, _)| c.crossing_count() > 0));
    }

    #[test]
    fn canonical_forms() {
        let t = gc(fixtures::TREFOIL);
        let relabeled = gc("component: O3+ U1+ O2+ U3+ O1+ U2+\n");
        assert_eq!(canonical_code(&t), canonical_code(&relabeled));
        let hopf_swapped = gc("component: U1+ U2+\ncomponent: O1+ O2+\n");
        assert_eq!(canonical_code(&gc(fixtures::HOPF2)), canonical_code(&hopf_swapped));
        let mirror = gc("component: O1- U2- O3- U1- O2- U3-\n");
        assert_ne!(canonical_code(&t), canonical_code(&mirror));
        let rotated = gc("component: U3+ O1+ U2+ O3+ U1+ O2+\n");
        assert_eq!(canonical_code(&t), canonical_code(&rotated));
    }

    /// Oracle: compare every relabeling, rotation and ordering directly.
    fn same_up_to_presentation(a: &GaussCode, b: &GaussCode) -> bool {
        fn perms(k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for p in perms(k - 1) {
                for i in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(i, k - 1);
                    out.push(q);
                }
            }
            out
        }
        if a.component_count() != b.component_count() || a.crossing_count() != b.crossing_count() {
            return false;
        }
        let k = a.component_count();
        let target = b.relabeled().to_string();
        for p in perms(k) {
            let lens: Vec<usize> = p.iter().map(|&c| a.components()[c].len().max(1)).collect();
            let total: usize = lens.iter().product();
            for mut r in 0..total {
                let comps: Vec<Vec<_>> = p
                    .iter()
                    .zip(&lens)
                    .map(|(&c, &l)| {
                        let comp = &a.components()[c];
                        let s = r % l;
                        r /= l;
                        (0..comp.len()).map(|i| comp[(i + s) % comp.len()]).collect()
                    })
                    .collect();
                let cand = GaussCode::new(a.signs().to_vec(), comps).unwrap().relabeled().to_string();
                if cand == target {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn canonical_form_agrees_with_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let base = [gc(fixtures::HOPF2), gc(fixtures::TREFOIL), gc(fixtures::VTREFOIL)];
        let mut codes = Vec::new();
        for b in &base {
            codes.push(b.clone());
            for _ in 0..6 {
                let ns = reidemeister_neighbors(b);
                codes.push(ns[rng.gen_range(0..ns.len())].0.clone());
            }
        }
        for a in &codes {
            for b in &codes {
                assert_eq!(canonical_code(a) == canonical_code(b), same_up_to_presentation(a, b), "{a}{b}");
            }
        }
    }

    #[test]
    fn trace_text_round_trips() {
        let d = gc(fixtures::TREFOIL);
        for (_, m) in reidemeister_neighbors(&d) {
            let again: RMove = m.to_string().parse().unwrap();
            assert_eq!(again, m);
        }
        assert!("R2+ @ c0 g0 c0 g0 +".parse::<RMove>().is_err());
    }

    #[test]
    fn r3_on_braid_triangle() {
        let d = gc("component: O1+ O2+\ncomponent: U1+ O3+\ncomponent: U2+ U3+\n");
        let e = apply(&d, &RMove::R3 { a: 1, b: 2, c: 3 }).unwrap();
        assert_eq!(e.to_string(), "component: O2+ O1+\ncomponent: O3+ U1+\ncomponent: U3+ U2+\n");
        assert_eq!(jones(&d).unwrap(), jones(&e).unwrap());
        let bad = gc("component: O1+ O2+ O4+ U4+\ncomponent: U1+ O3- O5+ U5+\ncomponent: U2+ U3- O6+ U6+\n");
        assert!(matches!(apply(&bad, &RMove::R3 { a: 1, b: 2, c: 3 }), Err(Error::PatternMismatch(_))));
    }

    /// Random walk that first picks a move type, then a site.
    pub(crate) fn random_walk(d: &GaussCode, steps: usize, rng: &mut ChaCha8Rng) -> (GaussCode, MoveTrace) {
        let mut cur = d.clone();
        let mut trace = MoveTrace::default();
        for _ in 0..steps {
            let ns = reidemeister_neighbors(&cur);
            let mut kinds: Vec<&str> = ns.iter().map(|(_, m)| m.name()).collect();
            kinds.dedup();
            kinds.sort();
            kinds.dedup();
            let kind = kinds[rng.gen_range(0..kinds.len())];
            let pick: Vec<_> = ns.into_iter().filter(|(_, m)| m.name() == kind).collect();
            let (next, m) = pick[rng.gen_range(0..pick.len())].clone();
            trace.steps.push(m);
            cur = next;
        }
        (cur, trace)
    }

    #[test]
    fn random_moves_keep_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut r3_seen = 0;
        for t in [fixtures::TREFOIL, fixtures::HOPF2, fixtures::VTREFOIL] {
            let d = gc(t);
            let (j, nb) = (jones(&d).unwrap(), normalized_binary(&d).unwrap());
            let kh = khovanov_z2_with(&d, MAX_CROSSINGS, BifurcationPolicy::ZeroMap).unwrap();
            for _ in 0..15 {
                let (e, trace) = random_walk(&d, 4, &mut rng);
                r3_seen += trace.steps.iter().filter(|m| m.rank() == 3).count();
                assert_eq!(trace.replay(&d).unwrap(), e);
                assert_eq!(jones(&e).unwrap(), j, "{trace}");
                assert_eq!(normalized_binary(&e).unwrap(), nb, "{trace}");
                if e.crossing_count() <= 9 {
                    assert_eq!(khovanov_z2_with(&e, MAX_CROSSINGS, BifurcationPolicy::ZeroMap).unwrap(), kh, "{trace}");
                }
            }
        }
        assert!(r3_seen > 0);
    }

    #[test]
    fn every_r3_site_keeps_the_bracket() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut checked = 0;
        for _ in 0..60 {
            let (d, _) = random_walk(&gc(fixtures::TREFOIL), 3, &mut rng);
            let b = kauffman_bracket(&d).unwrap();
            for (e, m) in reidemeister_neighbors(&d) {
                if m.rank() == 3 {
                    assert_eq!(kauffman_bracket(&e).unwrap(), b, "{d}{m}");
                    checked += 1;
                }
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn franklin_unknots_in_three_r2_moves() {
        let d = k_map(&mg(fixtures::FRANKLIN)).unwrap();
        let SearchResult::Found(trace) = equivalent_within(&d, &gc(fixtures::UNKNOT0), Budget::depth(3)) else {
            panic!("not found")
        };
        assert_eq!(trace.len(), 3);
        assert!(trace.steps.iter().all(|m| m.name() == "R2-"));
        assert_eq!(trace.replay(&d).unwrap().crossing_count(), 0);
    }

    #[test]
    fn search_is_symmetric_and_sound() {
        let d = gc(fixtures::HOPF2);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let (e, _) = random_walk(&d, 2, &mut rng);
        for (x, y) in [(&d, &e), (&e, &d)] {
            let SearchResult::Found(t) = equivalent_within(x, y, Budget::depth(4)) else { panic!("not found") };
            assert_eq!(canonical_code(&t.replay(x).unwrap()), canonical_code(y));
            assert_eq!(MoveTrace::parse(&t.to_string()).unwrap(), t);
        }
        assert_eq!(equivalent_within(&d, &d, Budget::default()), SearchResult::Found(MoveTrace::default()));
    }

    #[test]
    fn trefoil_is_not_found_near_the_unknot() {
        let (t, u) = (gc(fixtures::TREFOIL), gc(fixtures::UNKNOT0));
        assert_ne!(jones(&t).unwrap(), jones(&u).unwrap());
        let budget = Budget { max_depth: 4, max_nodes: 60_000 };
        assert_eq!(equivalent_within(&t, &u, budget), SearchResult::NotFoundWithinBudget);
    }

    #[test]
    fn round_trips() {
        for t in [fixtures::TREFOIL, fixtures::HOPF2, fixtures::UNKNOT0, fixtures::VTREFOIL] {
            assert!(round_trip_code(&gc(t)));
        }
        assert!(round_trip_graph(&mg(fixtures::THETA), Budget::depth(6)).unwrap().is_found());
    }

    #[test]
    fn g4_is_an_involution_and_g5_keeps_k() {
        for (name, t) in fixtures::ALL_MATCHED {
            let g = mg(t);
            let k = canonical_code(&k_map(&g).unwrap());
            for m in g.matched_edges() {
                let id = g.edges()[m].id.clone();
                let g4 = GrapheneMove::G4 { edge: id.clone() };
                assert_eq!(graphene_move(&graphene_move(&g, &g4).unwrap(), &g4).unwrap(), g, "{name}");
                for side in [crate::matched::Side::A, crate::matched::Side::B] {
                    let h = graphene_move(&g, &GrapheneMove::G5 { edge: id.clone(), side }).unwrap();
                    assert_eq!(canonical_code(&k_map(&h).unwrap()), k, "{name}");
                }
            }
            for v in g.vertices() {
                let h = graphene_move(&g, &GrapheneMove::M5 { vertex: v.id.clone() }).unwrap();
                assert_eq!(k_map(&h).unwrap(), k_map(&g).unwrap(), "{name}");
                assert_eq!(genus(&h).unwrap(), genus(&g).unwrap());
            }
        }
    }

    #[test]
    fn conjugation_gives_one_reidemeister_move() {
        for (name, t) in fixtures::ALL_MATCHED {
            let g = mg(t);
            let d = k_map(&g).unwrap();
            let ns = reidemeister_neighbors(&d);
            let mut targets: Vec<String> = ns.iter().map(|(c, _)| canonical_code(c)).collect();
            targets.sort();
            for (_, r) in ns.iter().filter(|(_, m)| !matches!(m, RMove::R2Add { .. })).take(40) {
                let mv = GrapheneMove::Conjugate(r.clone());
                let h = graphene_move(&g, &mv).unwrap();
                let got = canonical_code(&k_map(&h).unwrap());
                assert!(targets.binary_search(&got).is_ok(), "{name} {mv}");
                assert_eq!(mv.to_string().parse::<GrapheneMove>().unwrap(), mv);
            }
        }
    }

    #[test]
    fn g2_removes_a_digon() {
        let g = k_inverse(&gc(fixtures::FRANKLIN_CODE));
        let h = graphene_move(&g, &"G2 @ R2- x2 x3".parse().unwrap()).unwrap();
        assert_eq!(h.vertices().len(), g.vertices().len() - 4);
        assert!(graphene_move(&g, &"G2 @ R2- x1 x2".parse().unwrap()).is_err());
    }

    #[test]
    fn flips() {
        let theta = mg(fixtures::THETA);
        assert_eq!(flip_region(&theta, &[]).unwrap(), theta);
        let all: Vec<&str> = theta.vertices().iter().map(|v| v.id.as_str()).collect();
        let mirror = flip_region(&theta, &all).unwrap();
        let (a, b) = (k_map(&theta).unwrap(), k_map(&mirror).unwrap());
        assert!(equivalent_within(&a, &b, Budget::depth(6)).is_found());
        assert_eq!(baldridge_homology(&mirror).unwrap(), baldridge_homology(&theta).unwrap());

        let two = mg(fixtures::TWOCUT);
        let flipped = flip_region(&two, &["v0", "v1", "v2", "v3"]).unwrap();
        assert_ne!(flipped, two);
        assert_eq!(baldridge_homology(&flipped).unwrap(), baldridge_homology(&two).unwrap());

        let cube = mg(fixtures::CUBEQ3);
        assert!(matches!(flip_region(&cube, &["v0", "v1"]), Err(Error::CutTooLarge(4))));
        assert!(matches!(flip_region(&mg(fixtures::K33TREF), &[]), Err(Error::NonzeroGenus(_))));
    }

    #[test]
    fn sign_of_new_r2_crossings_is_opposite() {
        let d = apply(
            &gc(fixtures::UNKNOT0),
            &RMove::R2Add { over: (0, 0), under: (0, 0), sign: Sign::Neg, reversed: false, under_first: false },
        )
        .unwrap();
        assert_eq!(d.to_string(), "component: O1- O2+ U1- U2+\n");
    }
}
