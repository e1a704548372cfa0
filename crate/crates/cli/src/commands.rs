//! One function per subcommand, each turning an input into a [`Report`].

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use grk_core::homology::{baldridge_homology_limited, khovanov_z2_with, BifurcationPolicy, MAX_CROSSINGS};
use grk_core::invariants::{
    binary_bracket_limited, jones_limited, kauffman_bracket_limited, normalized_binary_limited,
    penrose_number_limited, tait_count_expansion_limited, two_factor_bracket_limited, DEFAULT_LIMIT,
};
use grk_core::{
    bicolored_multicycles, complement_cycles, fox_colorings, graph_isomorphic, k_inverse, k_map, k_map_oriented,
    multicycle_bijection, reidemeister_neighbors, round_trip_code, round_trip_graph, strong_embedding,
    tait_count_bruteforce, wirtinger_presentation, Budget, CycleOrientation, GaussCode, GrapheneMove, MatchedGraph,
    MoveTrace, RMove, SearchResult,
};

use crate::input::{self, Input};
use crate::report::Report;
use crate::{CliError, Opts, Orientation, TaitMethod};

fn guard(o: &Opts, what: &str, size: usize) -> Result<(), CliError> {
    match o.limit {
        Some(l) if size > l => Err(CliError::Domain(format!("{what} has size {size}, above the limit {l}"))),
        _ => Ok(()),
    }
}

fn limit(o: &Opts) -> usize {
    o.limit.unwrap_or(DEFAULT_LIMIT)
}

fn budget(o: &Opts) -> Budget {
    let d = Budget::default();
    Budget { max_depth: o.depth.unwrap_or(d.max_depth), max_nodes: o.budget.unwrap_or(d.max_nodes) }
}

/// The direction choices `--orientation` asks for, over `k` cycles.
fn directions(o: &Opts, k: usize) -> Result<Vec<Vec<bool>>, CliError> {
    match &o.orientation {
        Orientation::Auto => Ok(vec![vec![false; k]]),
        Orientation::Enumerate => {
            if k > 16 {
                return Err(CliError::Domain(format!("{k} cycles are too many to enumerate")));
            }
            Ok((0..1u64 << k).map(|b| CycleOrientation::from_bits(b, k).reversed).collect())
        }
        Orientation::Explicit(bits) if bits.len() == k => Ok(vec![bits.clone()]),
        Orientation::Explicit(bits) => {
            Err(CliError::Domain(format!("--orientation gives {} directions for {k} cycles", bits.len())))
        }
    }
}

fn bits_text(b: &[bool]) -> String {
    b.iter().map(|&x| if x { '1' } else { '0' }).collect()
}

pub fn validate(path: &str, text: &str) -> Result<Report, CliError> {
    let inp = input::parse_input(path, text)?;
    let mut r = Report::value("kind", inp.kind());
    r.text = format!("valid {}\n", inp.kind());
    match &inp {
        Input::Matched(g) => {
            r.push_kv("vertices", g.vertices().len());
            r.push_kv("edges", g.edges().len());
            r.push_kv("loops", g.free_loops().len());
        }
        Input::Code(d) => {
            r.push_kv("components", d.component_count());
            r.push_kv("crossings", d.crossing_count());
        }
        Input::Plain(g) => {
            r.push_kv("vertices", g.vertex_count());
            r.push_kv("edges", g.edges().len());
        }
    }
    Ok(r)
}

pub fn k(o: &Opts, path: &str, text: &str) -> Result<Report, CliError> {
    let g = input::matched(path, text)?;
    guard(o, "matched edges", g.matched_count())?;
    let n = CycleOrientation::default_for(&g).reversed.len();
    let dirs = directions(o, n)?;
    if dirs.len() == 1 {
        return Ok(Report::block("component", k_map_oriented(&g, &CycleOrientation { reversed: dirs[0].clone() })?));
    }
    let mut r = Report::default();
    for d in dirs {
        let code = k_map_oriented(&g, &CycleOrientation { reversed: d.clone() })?;
        let key = bits_text(&d);
        r.push_line(format!("orientation {key}"));
        r.append(Report::block(&format!("orientation.{key}"), code));
    }
    Ok(r)
}

pub fn kinv(o: &Opts, path: &str, text: &str) -> Result<Report, CliError> {
    let d = input::code(path, text)?;
    guard(o, "crossings", d.crossing_count())?;
    Ok(Report::block("line", k_inverse(&d)))
}

fn trace_report(res: SearchResult) -> Report {
    match res {
        SearchResult::Found(t) => {
            let mut r = Report::default();
            r.push_line(format!("found {} moves", t.len()));
            r.push_kv("found", true);
            r.push_kv("moves", t.len());
            r.append(Report::block("step", t));
            r
        }
        SearchResult::NotFoundWithinBudget => {
            let mut r = Report::value("found", false);
            r.text = "not found within budget\n".into();
            r
        }
    }
}

pub fn roundtrip(o: &Opts, path: &str, text: &str) -> Result<Report, CliError> {
    match input::parse_input(path, text)? {
        Input::Code(d) => {
            guard(o, "crossings", d.crossing_count())?;
            Ok(Report::value("identity", round_trip_code(&d)))
        }
        Input::Matched(g) => {
            guard(o, "matched edges", g.matched_count())?;
            Ok(trace_report(round_trip_graph(&g, budget(o))?))
        }
        Input::Plain(_) => Err(CliError::Domain(format!("{path}: expected a matched graph or a Gauss code"))),
    }
}

pub fn moves_apply(path: &str, text: &str, mv: &str) -> Result<Report, CliError> {
    match input::parse_input(path, text)? {
        Input::Code(d) => {
            let m: RMove = mv.parse()?;
            Ok(Report::block("component", m.apply(&d)?))
        }
        Input::Matched(g) => {
            let m: GrapheneMove = mv.parse()?;
            Ok(Report::block("line", grk_core::graphene_move(&g, &m)?))
        }
        Input::Plain(_) => Err(CliError::Domain(format!("{path}: moves act on matched graphs and Gauss codes"))),
    }
}

pub fn moves_replay(path: &str, text: &str, trace: &str) -> Result<Report, CliError> {
    match input::parse_input(path, text)? {
        Input::Code(d) => Ok(Report::block("component", MoveTrace::parse(trace)?.replay(&d)?)),
        Input::Matched(g) => {
            let mut cur: MatchedGraph = g;
            for line in trace.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
                cur = grk_core::graphene_move(&cur, &line.parse()?)?;
            }
            Ok(Report::block("line", cur))
        }
        Input::Plain(_) => Err(CliError::Domain(format!("{path}: moves act on matched graphs and Gauss codes"))),
    }
}

pub fn moves_search(o: &Opts, from: (&str, &str), to: (&str, &str)) -> Result<Report, CliError> {
    let a = input::code(from.0, from.1)?;
    let b = input::code(to.0, to.1)?;
    guard(o, "crossings", a.crossing_count().max(b.crossing_count()))?;
    Ok(trace_report(grk_core::equivalent_within(&a, &b, budget(o))))
}

pub fn moves_neighbors(o: &Opts, path: &str, text: &str) -> Result<Report, CliError> {
    let d = input::code(path, text)?;
    guard(o, "crossings", d.crossing_count())?;
    let ns = reidemeister_neighbors(&d);
    let mut r = Report::default();
    r.push_kv("count", ns.len());
    for (i, (_, m)) in ns.iter().enumerate() {
        r.push_line(m.to_string());
        r.push_kv(format!("move.{i}"), m);
    }
    Ok(r)
}

/// `--depth` random moves from a generator seeded by `--seed`: a move kind
/// first, then a site of that kind.
pub fn moves_walk(o: &Opts, path: &str, text: &str) -> Result<Report, CliError> {
    let mut cur: GaussCode = input::code(path, text)?;
    guard(o, "crossings", cur.crossing_count())?;
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
    let mut trace = MoveTrace::default();
    for _ in 0..o.depth.unwrap_or(4) {
        let ns = reidemeister_neighbors(&cur);
        let mut kinds: Vec<&str> = ns.iter().map(|(_, m)| m.name()).collect();
        kinds.dedup();
        let Some(&kind) = kinds.choose(&mut rng) else { break };
        let sites: Vec<&(GaussCode, RMove)> = ns.iter().filter(|(_, m)| m.name() == kind).collect();
        let (next, m) = *sites.choose(&mut rng).expect("kind has a site");
        trace.steps.push(m.clone());
        cur = next.clone();
    }
    let mut r = Report::block("step", &trace);
    r.append(Report::block("component", cur));
    Ok(r)
}

pub fn bracket(o: &Opts, path: &str, text: &str) -> Result<Report, CliError> {
    let d = input::code(path, text)?;
    Ok(Report::value("bracket", kauffman_bracket_limited(&d, limit(o))?))
}

pub fn jones(o: &Opts, path: &str, text: &str) -> Result<Report, CliError> {
    let d = input::code(path, text)?;
    Ok(Report::value("jones", jones_limited(&d, limit(o))?))
}

pub fn two_factor(o: &Opts, path: &str, text: &str) -> Result<Report, CliError> {
    let g = input::matched(path, text)?;
    Ok(Report::value("bracket", two_factor_bracket_limited(&g, limit(o))?))
}

pub fn penrose(o: &Opts, path: &str, text: &str) -> Result<Report, CliError> {
    let g = input::matched(path, text)?;
    let (n, positive_genus) = penrose_number_limited(&g, limit(o))?;
    let mut r = Report::value("penrose", n);
    if positive_genus {
        r.text = format!("{n} (positive genus)\n");
    }
    r.push_kv("positive_genus", positive_genus);
    Ok(r)
}

pub fn tait(o: &Opts, method: TaitMethod, path: &str, text: &str) -> Result<Report, CliError> {
    let n = match method {
        TaitMethod::Brute => {
            let g = input::graph(path, text)?;
            guard(o, "edges", g.edges().len())?;
            tait_count_bruteforce(&g)?
        }
        TaitMethod::Expansion => tait_count_expansion_limited(&input::matched(path, text)?, limit(o))?,
    };
    Ok(Report::value("tait", n))
}

pub fn matchings(o: &Opts, path: &str, text: &str) -> Result<Report, CliError> {
    let (g, names): (_, Vec<String>) = match input::parse_input(path, text)? {
        Input::Matched(m) => (m.underlying(), m.edges().iter().map(|e| e.id.clone()).collect()),
        Input::Plain(g) => {
            let n = g.edges().len();
            (g, (0..n).map(|i| i.to_string()).collect())
        }
        Input::Code(d) => {
            let m = k_inverse(&d);
            (m.underlying(), m.edges().iter().map(|e| e.id.clone()).collect())
        }
    };
    guard(o, "vertices", g.vertex_count())?;
    let ms = grk_core::enumerate_perfect_matchings(&g)?;
    let mut r = Report::default();
    r.push_line(format!("matchings {}", ms.len()));
    r.push_kv("count", ms.len());
    for (i, m) in ms.iter().enumerate() {
        let line = m.iter().map(|&e| names[e].as_str()).collect::<Vec<_>>().join(" ");
        r.push_line(&line);
        r.push_kv(format!("matching.{i}"), line);
    }
    Ok(r)
}

pub fn sum_jones(o: &Opts, path: &str, text: &str) -> Result<Report, CliError> {
    let g = input::matched(path, text)?;
    guard(o, "vertices", g.vertices().len())?;
    Ok(Report::value("sum", grk_core::sum_jones_at_one(&g)?))
}

pub fn binary(o: &Opts, normalized: bool, path: &str, text: &str) -> Result<Report, CliError> {
    let d = input::code(path, text)?;
    Ok(if normalized {
        Report::value("normalized", normalized_binary_limited(&d, limit(o))?)
    } else {
        Report::value("binary", binary_bracket_limited(&d, limit(o))?)
    })
}

pub fn wirtinger(o: &Opts, path: &str, text: &str) -> Result<Report, CliError> {
    let d = input::code(path, text)?;
    guard(o, "crossings", d.crossing_count())?;
    let p = wirtinger_presentation(&d);
    let mut r = Report::value("presentation", &p);
    r.push_kv("generators", p.generators);
    r.push_kv("relators", p.relators.len());
    Ok(r)
}

pub fn fox(o: &Opts, path: &str, text: &str) -> Result<Report, CliError> {
    let d = input::code(path, text)?;
    guard(o, "crossings", d.crossing_count())?;
    let f = fox_colorings(&d, o.prime)?;
    let mut r = Report::value("colorings", f);
    r.push_kv("prime", f.prime);
    r.push_kv("nullity", f.nullity);
    Ok(r)
}

fn dims_report(b: &grk_core::BigradedDims) -> Report {
    let mut r = Report { text: b.to_string(), kv: Vec::new() };
    for (&(i, j), rank) in &b.ranks {
        r.push_kv(format!("rank.{i}.{j}"), rank);
    }
    r
}

pub fn khovanov(o: &Opts, path: &str, text: &str) -> Result<Report, CliError> {
    let d = input::code(path, text)?;
    let lim = o.limit.unwrap_or(MAX_CROSSINGS);
    Ok(dims_report(&khovanov_z2_with(&d, lim, BifurcationPolicy::Reject)?))
}

pub fn baldridge(o: &Opts, path: &str, text: &str) -> Result<Report, CliError> {
    let g = input::matched(path, text)?;
    Ok(dims_report(&baldridge_homology_limited(&g, o.limit.unwrap_or(MAX_CROSSINGS))?))
}

pub fn shift_check(o: &Opts, path: &str, text: &str) -> Result<Report, CliError> {
    let g = input::matched(path, text)?;
    guard(o, "matched edges", g.matched_count())?;
    Ok(Report::value("shift_iso", grk_core::check_shift_iso(&g)?))
}

fn coloring_line(c: &grk_core::TwoColoring) -> String {
    c.colors
        .iter()
        .map(|comp| comp.iter().map(u8::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" | ")
}

pub fn two_colorings(o: &Opts, path: &str, text: &str) -> Result<Report, CliError> {
    let d = input::code(path, text)?;
    guard(o, "components", d.component_count())?;
    let cs = grk_core::two_colorings(&d);
    let mut r = Report::default();
    r.push_line(format!("colorings {}", cs.len()));
    r.push_kv("count", cs.len());
    for (i, c) in cs.iter().enumerate() {
        r.push_line(coloring_line(c));
        r.push_kv(format!("coloring.{i}"), coloring_line(c));
    }
    Ok(r)
}

pub fn multicycles(o: &Opts, path: &str, text: &str) -> Result<Report, CliError> {
    let g = input::matched(path, text)?;
    guard(o, "cycles", complement_cycles(&g).len() + g.free_loops().len())?;
    let ms = bicolored_multicycles(&g);
    let mut r = Report::default();
    r.push_line(format!("multicycles {}", ms.len()));
    r.push_kv("count", ms.len());
    for (i, m) in ms.iter().enumerate() {
        let image = coloring_line(&multicycle_bijection(&g, m)?);
        r.push_line(format!("{} -> {image}", m.display(&g)));
        r.push_kv(format!("multicycle.{i}"), m.display(&g));
        r.push_kv(format!("coloring.{i}"), image);
    }
    Ok(r)
}

pub fn strong_embed(o: &Opts, path: &str, text: &str) -> Result<Report, CliError> {
    let g = input::matched(path, text)?;
    let cycles = complement_cycles(&g).len();
    guard(o, "cycles", cycles + g.free_loops().len())?;
    let ms = bicolored_multicycles(&g);
    if ms.is_empty() {
        return Err(CliError::Domain(format!("{path}: a complement cycle is odd, so there is no bicolored multicycle")));
    }
    let dirs = directions(o, cycles)?;
    let mut r = Report::default();
    for (i, m) in ms.iter().enumerate() {
        for d in &dirs {
            let e = strong_embedding(&g, m, d)?;
            let key = format!("embedding.{i}.{}", bits_text(d));
            r.push_line(format!("multicycle {i}: {} directions {}", m.display(&g), bits_text(d)));
            r.text.push_str(&e.to_string());
            r.push_kv(format!("{key}.multicycle"), m.display(&g));
            r.push_kv(format!("{key}.genus"), e.genus());
            r.push_kv(format!("{key}.orientable"), e.orientable);
            r.push_kv(format!("{key}.faces"), e.faces.len());
        }
    }
    Ok(r)
}

pub fn dkh_rank(o: &Opts, path: &str, text: &str) -> Result<Report, CliError> {
    let d = match input::parse_input(path, text)? {
        Input::Code(d) => d,
        Input::Matched(g) => k_map(&g)?,
        Input::Plain(_) => return Err(CliError::Domain(format!("{path}: expected a matched graph or a Gauss code"))),
    };
    guard(o, "components", d.component_count())?;
    Ok(Report::value("rank", grk_core::dkh_rank(&d)))
}

pub fn genus(o: &Opts, path: &str, text: &str) -> Result<Report, CliError> {
    let g = input::matched(path, text)?;
    guard(o, "vertices", g.vertices().len())?;
    Ok(Report::value("genus", grk_core::genus(&g)?))
}

pub fn isomorphic(o: &Opts, a: (&str, &str), b: (&str, &str)) -> Result<Report, CliError> {
    let g1 = input::graph(a.0, a.1)?;
    let g2 = input::graph(b.0, b.1)?;
    guard(o, "vertices", g1.vertex_count().max(g2.vertex_count()))?;
    Ok(Report::value("isomorphic", graph_isomorphic(&g1, &g2)?))
}
