//! The thirteen acceptance criteria, one line each.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{fox_oracle, gc, mg, random_code, random_matched_graph, random_walk, two_coloring_oracle};
use grk_core::homology::{khovanov_z2_with, BifurcationPolicy, MAX_CROSSINGS};
use grk_core::rewrite::cut_size;
use grk_core::simple::named;
use grk_core::{
    baldridge_homology, binary_bracket, bicolored_multicycles, check_shift_iso, complement_cycles, dkh_rank,
    equivalent_within, fixtures, flip_region, fox_colorings, graded_euler_characteristic, graph_isomorphic,
    is_even_matching, jones, k_inverse, k_map, kauffman_bracket, khovanov_z2, multicycle_bijection,
    normalized_binary, penrose_number, round_trip_code, round_trip_graph, strong_embedding, sum_jones_at_one,
    tait_count_bruteforce, tait_count_expansion, two_colorings, two_factor_bracket, Budget, Error, FaceLabel,
    GaussCode, LaurentPoly, MatchedGraph, SearchResult, Var,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(terms: &[(i32, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(Var::Q, terms.iter().copied())
}

fn e<T>(r: grk_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn all_graphs() -> Vec<(&'static str, MatchedGraph)> {
    fixtures::ALL_MATCHED.iter().map(|(n, t)| (*n, mg(t))).collect()
}

fn all_codes() -> Vec<(&'static str, GaussCode)> {
    fixtures::ALL_CODES.iter().map(|(n, t)| (*n, gc(t))).collect()
}

fn c1_brackets() -> Outcome {
    let hopf = e(kauffman_bracket(&gc(fixtures::HOPF2)))?;
    ensure(hopf == q(&[(-2, 1), (0, 1), (2, 1), (4, 1)]), || format!("<HOPF2> = {hopf}"))?;
    let theta = e(two_factor_bracket(&mg(fixtures::THETA)))?;
    ensure(theta == q(&[(-2, 1), (0, 1)]), || format!("[THETA] = {theta}"))?;
    Ok(format!("<HOPF2> = {hopf}, [THETA] = {theta}"))
}

fn c2_penrose_tait() -> Outcome {
    let (p, _) = e(penrose_number(&mg(fixtures::THETA)))?;
    let brute_theta = e(tait_count_bruteforce(&named::theta()))?;
    ensure(p == 6 && brute_theta == 6, || format!("penrose {p}, brute {brute_theta}"))?;
    let cases = [
        ("THETA", fixtures::THETA, named::theta()),
        ("K4M", fixtures::K4M, named::k4()),
        ("CUBEQ3", fixtures::CUBEQ3, named::cube()),
        ("PETERSEN", fixtures::PETERSEN, named::petersen()),
        ("K33TREF", fixtures::K33TREF, named::k33()),
    ];
    let mut seen = Vec::new();
    for (name, text, graph) in cases {
        let g = mg(text);
        ensure(e(graph_isomorphic(&g.underlying(), &graph))?, || format!("{name} is not the named graph"))?;
        let brute = e(tait_count_bruteforce(&graph))?;
        let exp = e(tait_count_expansion(&g))?;
        ensure(brute == exp, || format!("{name}: expansion {exp}, brute force {brute}"))?;
        seen.push(format!("{name}={brute}"));
    }
    ensure(seen.contains(&"PETERSEN=0".to_string()), || "Petersen is not 0".into())?;
    Ok(format!("penrose(THETA) = 6; {}", seen.join(" ")))
}

fn c3_functor_identity() -> Outcome {
    let mut count = 0;
    for (name, g) in all_graphs() {
        let a = e(two_factor_bracket(&g))?;
        let b = e(kauffman_bracket(&e(k_map(&g))?))?;
        ensure(a == b, || format!("{name}: {a} vs {b}"))?;
        count += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..100 {
        let m = rng.gen_range(1..=8);
        let g = random_matched_graph(m, &mut rng);
        let a = e(two_factor_bracket(&g))?;
        let b = e(kauffman_bracket(&e(k_map(&g))?))?;
        ensure(a == b, || format!("random graph {i}: {a} vs {b}\n{g}"))?;
        count += 1;
    }
    Ok(format!("{count} graphs (fixtures and 100 seeded random, up to 8 matched edges)"))
}

fn c4_round_trip() -> Outcome {
    for name in ["TREFOIL", "HOPF2", "UNKNOT0"] {
        let d = gc(fixtures::ALL_CODES.iter().find(|(n, _)| *n == name).unwrap().1);
        ensure(round_trip_code(&d), || format!("K(K⁻¹({name})) differs"))?;
    }
    match e(round_trip_graph(&mg(fixtures::THETA), Budget::depth(6)))? {
        SearchResult::Found(t) => Ok(format!("codes exact; THETA recovered with {} moves", t.len())),
        SearchResult::NotFoundWithinBudget => Err("THETA not recovered within depth 6".into()),
    }
}

fn c5_inverse_structure() -> Outcome {
    let t = k_inverse(&gc(fixtures::TREFOIL));
    ensure(e(graph_isomorphic(&t.underlying(), &named::k33()))?, || "K⁻¹(TREFOIL) is not K33".into())?;
    let mut codes: Vec<GaussCode> = all_codes().into_iter().map(|(_, d)| d).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    for _ in 0..200 {
        let n = rng.gen_range(0..=6);
        let k = rng.gen_range(1..=3);
        codes.push(random_code(n, k, &mut rng));
    }
    for d in &codes {
        let g = k_inverse(d);
        ensure(is_even_matching(&g) == d.is_even(), || format!("evenness differs for\n{d}"))?;
    }
    for name in ["TREFOIL", "HOPF2", "UNKNOT0"] {
        let d = gc(fixtures::ALL_CODES.iter().find(|(n, _)| *n == name).unwrap().1);
        ensure(is_even_matching(&k_inverse(&d)), || format!("K⁻¹({name}) is not even"))?;
    }
    Ok(format!("K⁻¹(TREFOIL) ≅ K33; evenness matches on {} codes", codes.len()))
}

fn c6_petersen_franklin() -> Outcome {
    let p = e(k_map(&mg(fixtures::PETERSEN)))?;
    ensure(p.component_count() == 2, || format!("K(PETERSEN) has {} components", p.component_count()))?;
    let f = e(k_map(&mg(fixtures::FRANKLIN)))?;
    match equivalent_within(&f, &gc(fixtures::UNKNOT0), Budget::depth(3)) {
        SearchResult::Found(t) => {
            ensure(t.len() == 3 && t.steps.iter().all(|m| m.name() == "R2-"), || format!("trace:\n{t}"))?;
            ensure(e(t.replay(&f))? == gc(fixtures::UNKNOT0), || "trace does not end at the unknot".into())?;
            let steps: Vec<String> = t.steps.iter().map(|m| m.to_string()).collect();
            Ok(format!("K(PETERSEN) has 2 components; FRANKLIN: {}", steps.join(", ")))
        }
        SearchResult::NotFoundWithinBudget => Err("FRANKLIN does not reduce within 3 moves".into()),
    }
}

fn c7_sum_formula() -> Outcome {
    let theta = e(sum_jones_at_one(&mg(fixtures::THETA)))?;
    ensure(theta == 6, || format!("THETA sum {theta}"))?;
    for (name, text) in [("K4M", fixtures::K4M), ("CUBEQ3", fixtures::CUBEQ3)] {
        let g = mg(text);
        let s = e(sum_jones_at_one(&g))?;
        let t = e(tait_count_bruteforce(&g.underlying()))?;
        ensure(s == t as i64, || format!("{name}: sum {s}, Tait {t}"))?;
    }
    Ok("THETA = 6, K4M and CUBEQ3 equal their Tait counts".into())
}

fn c8_homology_shift() -> Outcome {
    for (name, text) in [("THETA", fixtures::THETA), ("K4M", fixtures::K4M), ("CUBEQ3", fixtures::CUBEQ3)] {
        ensure(e(check_shift_iso(&mg(text)))?, || format!("shift identity fails on {name}"))?;
    }
    for (name, text) in [("TREFOIL", fixtures::TREFOIL), ("HOPF2", fixtures::HOPF2), ("UNKNOT0", fixtures::UNKNOT0)] {
        let d = gc(text);
        let chi = graded_euler_characteristic(&e(khovanov_z2(&d))?);
        let j = e(jones(&d))?;
        ensure(chi == j, || format!("{name}: χ = {chi}, Jones = {j}"))?;
    }
    Ok("shift identity on THETA, K4M, CUBEQ3; χ(Kh) = Jones on TREFOIL, HOPF2, UNKNOT0".into())
}

/// Smallest number of edges joining a proper nonempty vertex set to the rest.
fn min_proper_cut(g: &MatchedGraph) -> usize {
    let n = g.vertices().len();
    (1..(1u64 << n) - 1)
        .map(|s| {
            let region: Vec<bool> = (0..n).map(|v| s >> v & 1 == 1).collect();
            cut_size(g, &region)
        })
        .min()
        .unwrap_or(0)
}

const FLIP_REASON: &str = "CUBEQ3 has no 2-edge cut";

fn c9_flips() -> Outcome {
    let theta = mg(fixtures::THETA);
    let flipped = e(flip_region(&theta, &["u", "v"]))?;
    ensure(e(baldridge_homology(&theta))? == e(baldridge_homology(&flipped))?, || "THETA 0-flip changes H".into())?;

    let two = mg(fixtures::TWOCUT);
    let region = ["v0", "v1", "v2", "v3"];
    let flipped = e(flip_region(&two, &region))?;
    ensure(e(baldridge_homology(&two))? == e(baldridge_homology(&flipped))?, || "TWOCUT 2-flip changes H".into())?;

    let cube = mg(fixtures::CUBEQ3);
    let cut = min_proper_cut(&cube);
    let refused = matches!(flip_region(&cube, &["v0", "v1"]), Err(Error::CutTooLarge(_)));
    ensure(cut <= 2, || {
        format!(
            "{FLIP_REASON} (smallest proper cut {cut}, flip refused: {refused}); THETA 0-flip and the TWOCUT \
             2-flip substitute both keep H"
        )
    })?;
    Ok("THETA 0-flip and CUBEQ3 2-flip keep H".into())
}

fn c10_move_invariance() -> Outcome {
    let mut walks = 0;
    let mut kinds = BTreeSet::new();
    for (name, text) in [("TREFOIL", fixtures::TREFOIL), ("HOPF2", fixtures::HOPF2)] {
        let d = gc(text);
        let kh = |d: &GaussCode| e(khovanov_z2_with(d, MAX_CROSSINGS, BifurcationPolicy::ZeroMap));
        let base = (e(jones(&d))?, e(normalized_binary(&d))?, kh(&d)?, dkh_rank(&d));
        for seed in 0..50u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
            let steps = rng.gen_range(1..=4);
            let (end, trace) = random_walk(&d, steps, &mut rng);
            ensure(e(trace.replay(&d))? == end, || format!("{name} seed {seed}: trace does not replay"))?;
            kinds.extend(trace.steps.iter().map(|m| m.name()));
            let got = (e(jones(&end))?, e(normalized_binary(&end))?, kh(&end)?, dkh_rank(&end));
            ensure(got == base, || format!("{name} seed {seed}: invariants change along\n{trace}"))?;
            walks += 1;
        }
    }
    let kinds: Vec<&str> = kinds.into_iter().collect();
    Ok(format!("{walks} walks of 1 to 4 moves ({}); Kh uses the zero map on bifurcations", kinds.join(" ")))
}

fn c11_binary() -> Outcome {
    let u = e(binary_bracket(&gc(fixtures::UNKNOT0)))?;
    ensure(u == LaurentPoly::constant(Var::A, 2), || format!("{{O}} = {u}"))?;
    let circle = gc(fixtures::UNKNOT0);
    for (name, d) in all_codes() {
        let b = e(binary_bracket(&d))?;
        let doubled = e(binary_bracket(&d.disjoint_union(&circle)))?;
        ensure(doubled == b.scale(2), || format!("{name}: {doubled} vs 2 × {b}"))?;
    }
    let odd = e(binary_bracket(&gc("component: O1+\ncomponent: U1+\n")))?;
    ensure(odd.is_zero(), || format!("non-even code gives {odd}"))?;
    let h = e(normalized_binary(&gc(fixtures::HOPF2)))?.eval_at_one();
    ensure(h == 4, || format!("normalized HOPF2 at 1 is {h}"))?;
    Ok("{O} = 2, doubling, vanishing on an odd code, HOPF2 at 1 = 4".into())
}

fn c12_pipeline() -> Outcome {
    let mut codes: Vec<(String, GaussCode)> = all_codes().into_iter().map(|(n, d)| (n.to_string(), d)).collect();
    for (name, g) in all_graphs() {
        codes.push((format!("K({name})"), e(k_map(&g))?));
    }
    for (name, d) in &codes {
        let n = two_colorings(d).len();
        let want = if d.is_even() { 1usize << d.component_count() } else { 0 };
        ensure(n == want && n == two_coloring_oracle(d), || format!("{name}: {n} colorings, expected {want}"))?;
    }
    for (name, text) in [("THETA", fixtures::THETA), ("CUBEQ3", fixtures::CUBEQ3)] {
        let g = mg(text);
        let image: Vec<_> = bicolored_multicycles(&g).iter().map(|m| multicycle_bijection(&g, m)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        let set: BTreeSet<_> = image.iter().cloned().collect();
        let target: BTreeSet<_> = two_colorings(&e(k_map(&g))?).into_iter().collect();
        ensure(set.len() == image.len() && set == target, || format!("{name}: not a bijection"))?;
    }
    let g = mg(fixtures::VTREF_GRAPH);
    let dirs = vec![false; complement_cycles(&g).len()];
    for m in bicolored_multicycles(&g) {
        let emb = e(strong_embedding(&g, &m, &dirs))?;
        ensure(emb.all_faces_simple(), || "VTREF_GRAPH: a face is not simple".into())?;
        for (edge, sides) in emb.edge_sides().iter().enumerate() {
            if !g.edges()[edge].is_matched() {
                let [a, b] = [emb.labels[sides[0]], emb.labels[sides[1]]];
                ensure(a != b && (a == FaceLabel::X || b == FaceLabel::X), || "labels do not alternate".into())?;
            }
        }
    }
    for (name, g) in all_graphs() {
        let l = complement_cycles(&g).len() + g.free_loops().len();
        let r = dkh_rank(&e(k_map(&g))?);
        let want = if is_even_matching(&g) { 1 << l } else { 0 };
        ensure(r == want, || format!("{name}: rank {r}, expected {want}"))?;
    }
    Ok("colorings, bijection, VTREF_GRAPH embedding, ranks; the (-2,-5) bigrading is not computed".into())
}

fn c13_fox() -> Outcome {
    let t = gc(fixtures::TREFOIL);
    for (p, want) in [(3, 9), (5, 5)] {
        let got = e(fox_colorings(&t, p))?.count().unwrap() as u64;
        let oracle = fox_oracle(&t, p);
        ensure(got == want && oracle == want, || format!("p = {p}: {got}, oracle {oracle}"))?;
    }
    Ok("TREFOIL: 9 mod 3, 5 mod 5, both matching enumeration".into())
}

/// Criteria that are known not to hold as stated, with the reason.
const KNOWN_FAILURES: &[(usize, &str)] = &[(9, FLIP_REASON)];

fn main() {
    let criteria: [(usize, &str, u64, fn() -> Outcome); 13] = [
        (1, "bracket golden values", 1, c1_brackets),
        (2, "Penrose and Tait counts", 5, c2_penrose_tait),
        (3, "two-factor bracket equals bracket of K", 60, c3_functor_identity),
        (4, "round trip through K", 30, c4_round_trip),
        (5, "structure of K inverse", 1, c5_inverse_structure),
        (6, "Petersen and Franklin", 10, c6_petersen_franklin),
        (7, "sum formula", 30, c7_sum_formula),
        (8, "homology shift", 60, c8_homology_shift),
        (9, "flip invariance", 60, c9_flips),
        (10, "move invariance", 120, c10_move_invariance),
        (11, "binary bracket", 5, c11_binary),
        (12, "colorings, multicycles, embeddings", 30, c12_pipeline),
        (13, "Fox colorings", 1, c13_fox),
    ];
    let mut unexpected = Vec::new();
    for (id, title, secs, run) in criteria {
        let start = Instant::now();
        let mut outcome = run();
        let took = start.elapsed();
        if outcome.is_ok() && took > Duration::from_secs(secs) {
            outcome = Err(format!("took {took:.2?}, budget {secs} s"));
        }
        match &outcome {
            Ok(detail) => println!("criterion {id:>2} PASS  {title} ({took:.2?}): {detail}"),
            Err(reason) => println!("criterion {id:>2} FAIL  {title} ({took:.2?}): {reason}"),
        }
        if let Err(reason) = outcome {
            let known = KNOWN_FAILURES.iter().any(|&(k, why)| k == id && reason.starts_with(why));
            if !known {
                unexpected.push(format!("{id}: {reason}"));
            }
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures:\n{}", unexpected.join("\n"));
        std::process::exit(1);
    }
}
