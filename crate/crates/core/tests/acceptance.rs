mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use regiongray::arrangement::*;
use regiongray::families::*;
use regiongray::graphic::{brute_force_acyclic_orientations, graph_arrangement, SignedGraph};
use regiongray::lattice::*;
use regiongray::triangulation::*;
use regiongray::zigzag::*;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn words(s: &str) -> Vec<String> {
    s.split_whitespace().map(str::to_string).collect()
}

const SJT: [&str; 4] = [
    "1",
    "12 21",
    "123 132 312 321 231 213",
    "1234 1243 1423 4123 4132 1432 1342 1324 3124 3142 3412 4312 4321 3421 3241 3214 2314 2341 2431 4231 4213 2413 2143 2134",
];
const BRGC: [&str; 4] = [
    "0 1",
    "00 01 11 10",
    "000 001 011 010 110 111 101 100",
    "0000 0001 0011 0010 0110 0111 0101 0100 1100 1101 1111 1110 1010 1011 1001 1000",
];
const SIGNED: [&str; 3] = [
    "1 -1",
    "12 21 -21 1-2 -1-2 -2-1 2-1 -12",
    "123 132 312 -312 1-32 12-3 21-3 2-31 -321 321 231 213 -213 -231 3-21 -3-21 -2-31 -21-3 \
     1-2-3 1-3-2 -31-2 31-2 13-2 1-23 -1-23 -13-2 3-1-2 -3-1-2 -1-3-2 -1-2-3 -2-1-3 -2-3-1 -3-2-1 3-2-1 \
     -23-1 -2-13 2-13 23-1 32-1 -32-1 2-3-1 2-1-3 -12-3 -1-32 -3-12 3-12 -132 -123",
];

fn zigzag_decoded(kind: Coxeter, n: usize) -> Vec<String> {
    let (arr, chain) = kind.arrangement(n).unwrap();
    let graph = arr.region_graph();
    let l = ham_cycle_from(&arr, &chain, &graph, &kind.identity_region(n)).unwrap();
    l.order
        .iter()
        .map(|&i| kind.decode(n, &graph.region(i)).unwrap().replace(' ', ""))
        .collect()
}

fn criterion_1() -> Check {
    for n in 1..=4 {
        let sjt: Vec<String> = sjt_generate(n)
            .map(|p| p.iter().map(|v| v.to_string()).collect())
            .collect();
        ensure(sjt == words(SJT[n - 1]), || format!("sjt({n}) differs"))?;
        ensure(brgc_generate(n).collect::<Vec<_>>() == words(BRGC[n - 1]), || {
            format!("brgc({n}) differs")
        })?;
        if n >= 2 {
            ensure(zigzag_decoded(Coxeter::TypeA, n) == words(SJT[n - 1]), || {
                format!("type A zigzag {n} differs")
            })?;
        }
        ensure(zigzag_decoded(Coxeter::Coordinate, n) == words(BRGC[n - 1]), || {
            format!("coordinate zigzag {n} differs")
        })?;
    }
    for n in 1..=3 {
        let signed: Vec<String> = signed_sjt_generate(n).map(|w| w.to_string().replace(' ', "")).collect();
        ensure(signed == words(SIGNED[n - 1]), || format!("signed_sjt({n}) differs"))?;
        ensure(zigzag_decoded(Coxeter::TypeB, n) == words(SIGNED[n - 1]), || {
            format!("type B zigzag {n} differs")
        })?;
    }
    Ok("24 permutations, 16 strings, 48 signed permutations match".into())
}

fn cycle_instances() -> Vec<(String, HyperplaneArrangement, SupersolvableChain)> {
    let mut out = Vec::new();
    for (kind, low, top) in [
        (Coxeter::Coordinate, 2, 8),
        (Coxeter::TypeA, 3, 6),
        (Coxeter::TypeB, 2, 4),
    ] {
        for n in low..=top {
            let (a, c) = kind.arrangement(n).unwrap();
            out.push((format!("{kind:?} n={n}"), a, c));
        }
    }
    for (k, g) in common::chordal_graphs()
        .iter()
        .chain(&common::signed_graphs())
        .enumerate()
    {
        let (a, c) = graph_arrangement(g).unwrap();
        if a.rank() >= 2 {
            out.push((format!("graph {k}"), a, c));
        }
    }
    out
}

fn criterion_2() -> Check {
    let instances = cycle_instances();
    let graphs = instances
        .iter()
        .filter(|(name, _, _)| name.starts_with("graph"))
        .count();
    ensure(graphs >= 10, || format!("only {graphs} graph instances"))?;
    let mut regions = 0;
    for (name, arr, chain) in &instances {
        let graph = arr.region_graph();
        let listing = ham_cycle_supersolvable(arr, chain).map_err(|e| format!("{name}: {e}"))?;
        verify_listing(&graph, &listing).map_err(|v| format!("{name}: {v}"))?;
        ensure(listing.cyclic && listing.len() % 2 == 0, || {
            format!("{name}: not an even cycle")
        })?;
        regions += listing.len();
    }
    Ok(format!("{} arrangements, {regions} regions", instances.len()))
}

fn weak_order(kind: Coxeter, n: usize) -> (HyperplaneArrangement, SupersolvableChain, RegionGraph, FiniteLattice) {
    let (arr, chain) = kind.arrangement(n).unwrap();
    let graph = arr.region_graph();
    let lat = try_lattice(poset_of_regions(&graph, &kind.identity_region(n)).unwrap()).unwrap();
    (arr, chain, graph, lat)
}

fn named_pairs(kind: Coxeter, n: usize, graph: &RegionGraph) -> Vec<(usize, usize)> {
    let name = if kind == Coxeter::TypeA {
        "sylvester"
    } else {
        "typeB-sylvester"
    };
    kind.named_congruence(n, name)
        .unwrap()
        .iter()
        .map(|(a, b)| (graph.index_of(a).unwrap(), graph.index_of(b).unwrap()))
        .collect()
}

fn criterion_3() -> Check {
    let mut paths = 0;
    let cases = [
        (Coxeter::TypeA, 2),
        (Coxeter::TypeA, 3),
        (Coxeter::TypeA, 4),
        (Coxeter::TypeA, 5),
        (Coxeter::TypeB, 1),
        (Coxeter::TypeB, 2),
        (Coxeter::TypeB, 3),
    ];
    for (seed, (kind, n)) in cases.into_iter().enumerate() {
        let (arr, chain, graph, lat) = weak_order(kind, n);
        let base = kind.identity_region(n);
        let mut congs = vec![
            CongruencePartition::discrete(lat.len()),
            CongruencePartition::full(lat.len()),
            congruence_closure(&lat, &named_pairs(kind, n, &graph)),
        ];
        let mut rng = common::rng(seed as u64);
        for _ in 0..20 {
            congs.push(congruence_closure(
                &lat,
                &common::random_generators(&mut rng, lat.len()),
            ));
        }
        for cong in &congs {
            let q = quotient_cover_graph(&lat, cong);
            let path =
                ham_path_quotient(&arr, &chain, &graph, &lat, &base, cong).map_err(|e| format!("{kind:?} {n}: {e}"))?;
            verify_listing(&q, &path).map_err(|v| format!("{kind:?} {n}, {} classes: {v}", cong.len()))?;
            paths += 1;
        }
    }
    Ok(format!("{paths} quotient paths"))
}

fn criterion_4() -> Check {
    for n in 2..=5 {
        let sjt: Vec<String> = sjt_generate(n)
            .map(|p| p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        ensure(sjt == greedy_decoded(Coxeter::TypeA, n), || {
            format!("sjt({n}) is not the greedy order")
        })?;
    }
    for n in 1..=4 {
        let signed: Vec<String> = signed_sjt_generate(n).map(|w| w.to_string()).collect();
        ensure(signed == greedy_decoded(Coxeter::TypeB, n), || {
            format!("signed_sjt({n}) is not the greedy order")
        })?;
    }
    for n in 1..=10 {
        ensure(
            brgc_generate(n).collect::<Vec<_>>() == greedy_decoded(Coxeter::Coordinate, n),
            || format!("brgc({n}) is not the greedy order"),
        )?;
    }
    let mut graphs: Vec<SignedGraph> = common::chordal_graphs();
    graphs.extend(common::signed_graphs());
    graphs.extend(common::non_chordal_graphs());
    for g in &graphs {
        let brute = brute_force_acyclic_orientations(g).map_err(|e| e.to_string())?.len();
        let normals: Vec<Vec<i64>> = g
            .edges()
            .iter()
            .map(|&(i, j, s)| {
                let mut v = vec![0; g.vertex_count()];
                v[i] = 1;
                v[j] = if s == regiongray::graphic::EdgeSign::Positive {
                    -1
                } else {
                    1
                };
                v
            })
            .collect();
        let regions = HyperplaneArrangement::from_integers(g.vertex_count(), &normals)
            .unwrap()
            .enumerate_regions()
            .len();
        ensure(regions == brute, || {
            format!("{}: {regions} regions, {brute} acyclic orientations", g.to_json())
        })?;
    }
    let mut closures = 0;
    let lattices = [
        (Coxeter::TypeA, 3),
        (Coxeter::TypeA, 4),
        (Coxeter::TypeA, 5),
        (Coxeter::TypeA, 6),
        (Coxeter::TypeB, 2),
        (Coxeter::TypeB, 3),
    ];
    for (seed, (kind, n)) in lattices.into_iter().enumerate() {
        let (_, _, graph, lat) = weak_order(kind, n);
        ensure(lat.len() <= 720, || "lattice too large".into())?;
        let mut rng = common::rng(100 + seed as u64);
        let mut gens = vec![named_pairs(kind, n, &graph)];
        for _ in 0..5 {
            gens.push(common::random_generators(&mut rng, lat.len()));
        }
        for g in gens {
            let fast = congruence_closure(&lat, &g);
            ensure(common::same_partition(&fast, &common::naive_closure(&lat, &g)), || {
                format!("{kind:?} {n}: closures differ")
            })?;
            closures += 1;
        }
    }
    Ok(format!(
        "generators, {} graphs, {closures} closures agree",
        graphs.len()
    ))
}

fn greedy_decoded(kind: Coxeter, n: usize) -> Vec<String> {
    let (arr, chain) = kind.arrangement(n).unwrap();
    let graph = arr.region_graph();
    let l = greedy_traversal(&arr, &chain, &graph, &kind.identity_region(n)).unwrap();
    l.order
        .iter()
        .map(|&i| kind.decode(n, &graph.region(i)).unwrap())
        .collect()
}

/// Gray code orders for n = 1, 2, 3, frozen from this implementation.
const TRIANGULATION_GOLDEN: [&str; 3] = [
    "0-~0 1-~1",
    "0-~0;0-~1;1-~0 0-2;0-~0;~0-~2 0-2;2-~2;~0-~2 1-~2;2-~1;2-~2 1-~1;1-~2;2-~1 0-~1;1-~0;1-~1",
    "0-~0;0-~1;0-~2;1-~0;2-~0 0-~0;0-~1;1-3;1-~0;~1-~3 0-3;0-~0;1-3;~0-~3;~1-~3 0-3;1-3;3-~3;~0-~3;~1-~3 \
     1-3;1-~3;3-~1;3-~3;~1-~3 1-~3;2-~3;3-~1;3-~2;3-~3 0-2;2-~3;3-~2;3-~3;~0-~2 0-2;0-3;3-~3;~0-~2;~0-~3 \
     0-2;0-3;0-~0;~0-~2;~0-~3 0-2;0-~0;0-~2;2-~0;~0-~2 0-2;0-~2;2-~0;2-~2;~0-~2 0-2;2-~2;2-~3;3-~2;~0-~2 \
     1-~3;2-~2;2-~3;3-~1;3-~2 1-~2;1-~3;2-~1;2-~2;3-~1 0-~2;1-~2;2-~0;2-~1;2-~2 0-~2;1-~1;1-~2;2-~0;2-~1 \
     1-~1;1-~2;1-~3;2-~1;3-~1 1-3;1-~1;1-~3;3-~1;~1-~3 0-~1;1-3;1-~0;1-~1;~1-~3 0-~1;0-~2;1-~0;1-~1;2-~0",
];

fn criterion_5() -> Check {
    for n in 1..=5 {
        let ts = enumerate_symmetric_triangulations(n).map_err(|e| e.to_string())?;
        for t in &ts {
            ensure(theta_map(&pi_map(t)).ok().as_ref() == Some(t), || {
                format!("theta(pi({t})) differs")
            })?;
        }
        let avs = avoiders(n);
        ensure(avs.len() == ts.len(), || {
            format!("n={n}: {} avoiders, {} triangulations", avs.len(), ts.len())
        })?;
        for f in &avs {
            let back = theta_map(f).map(|t| pi_map(&t));
            ensure(back.as_ref().ok() == Some(f), || format!("pi(theta({f})) differs"))?;
        }
        ensure(verify_flip_jump(n).map_err(|e| e.to_string())?, || {
            format!("n={n}: flip and jump graphs differ")
        })?;
    }
    ensure(avoiders(5).len() == 252, || "n=5 count".into())?;
    for (n, want) in [(1, 2), (2, 6), (3, 20), (4, 70)] {
        let code = triangulation_gray_code(n).map_err(|e| e.to_string())?;
        ensure(code.len() == want, || format!("n={n}: {} triangulations", code.len()))?;
        let g = flip_graph(n).map_err(|e| e.to_string())?;
        let order: Vec<usize> = code.iter().map(|t| g.index_of(t).unwrap()).collect();
        verify_listing(
            &g,
            &Listing {
                order,
                cyclic: want > 2,
            },
        )
        .map_err(|v| format!("n={n}: {v}"))?;
        if n <= 3 {
            let text: Vec<String> = code.iter().map(|t| t.to_text()).collect();
            ensure(text == words(TRIANGULATION_GOLDEN[n - 1]), || {
                format!("n={n}: order changed")
            })?;
        }
    }
    Ok("roundtrips, flip-jump isomorphism and cyclic flip Gray codes hold; \
        n<=3 orders match the frozen goldens"
        .into())
}

fn sub(arr: &HyperplaneArrangement, ix: &[usize]) -> HyperplaneArrangement {
    HyperplaneArrangement::new(arr.dim(), ix.iter().map(|&i| arr.normal(i).to_vec()).collect()).unwrap()
}

/// Path fibers of the right length, cross edges only between base-adjacent
/// fibers, and aligned with matching or opposite offsets.
fn fibers_ok(arr: &HyperplaneArrangement, h0: &[usize], h1: &[usize]) -> Result<(), String> {
    let graph = arr.region_graph();
    let fp = fiber_partition(&graph, arr, h0, h1).map_err(|e| e.to_string())?;
    let last = h1.len();
    let mut cross: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
    let pos = |f: usize, r: usize| fp.path(f).iter().position(|&x| x == r).unwrap();
    for (a, b, h) in graph.edges() {
        let (f, g) = (fp.fiber_of(a), fp.fiber_of(b));
        if f == g {
            ensure(h1.contains(&h), || "fiber edge crosses a base hyperplane".into())?;
            continue;
        }
        ensure(h0.contains(&h), || "cross edge crosses a fiber hyperplane".into())?;
        let key = (f.min(g), f.max(g));
        let (pa, pb) = if f < g {
            (pos(f, a), pos(g, b))
        } else {
            (pos(g, b), pos(f, a))
        };
        cross.entry(key).or_default().push((pa, pb));
    }
    for ((f, g), edges) in cross {
        let same = edges.iter().all(|&(i, j)| i == j) && edges.contains(&(0, 0)) && edges.contains(&(last, last));
        let flip =
            edges.iter().all(|&(i, j)| i + j == last) && edges.contains(&(0, last)) && edges.contains(&(last, 0));
        ensure(same || flip, || format!("fibers {f} and {g} are not endpoint aligned"))?;
    }
    Ok(())
}

fn criterion_6() -> Check {
    let instances = cycle_instances();
    let mut levels = 0;
    for (name, arr, chain) in &instances {
        let g = arr.region_graph();
        ensure(
            g.is_connected() && g.is_bipartite_by_parity() && g.len() % 2 == 0,
            || format!("{name}: region graph shape"),
        )?;
        if arr.len() > 16 {
            continue;
        }
        let lv = chain.levels();
        for j in 1..lv.len() {
            let s = sub(arr, &lv[j]);
            let local = |ix: &[usize]| -> Vec<usize> {
                ix.iter().map(|i| lv[j].iter().position(|x| x == i).unwrap()).collect()
            };
            fibers_ok(&s, &local(&lv[j - 1]), &local(&chain.added(j))).map_err(|e| format!("{name} level {j}: {e}"))?;
            levels += 1;
        }
    }
    let generic =
        HyperplaneArrangement::from_integers(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]]).unwrap();
    let g = generic.region_graph();
    let (even, odd) = g.parity_class_sizes();
    ensure(g.len() == 14 && even.min(odd) == 6 && even.max(odd) == 8, || {
        format!("generic: {} regions, {even}/{odd}", g.len())
    })?;
    for mask in 1u32..15 {
        let h0: Vec<usize> = (0..4).filter(|i| mask >> i & 1 == 1).collect();
        let h1: Vec<usize> = (0..4).filter(|i| mask >> i & 1 == 0).collect();
        ensure(!check_supersolvable_split(&generic, &h0, &h1).unwrap(), || {
            format!("split {h0:?} passes")
        })?;
    }
    Ok(format!(
        "{} region graphs, {levels} fiber levels, generic 14 = 6 + 8 with no split",
        instances.len()
    ))
}

fn criterion_7() -> Check {
    let start = Instant::now();
    let mut g = SignedSjt::new(7);
    let mut count = 0u64;
    let mut checksum = 0i64;
    while g.advance() {
        count += 1;
        checksum += g.window()[0] as i64;
    }
    let signed = start.elapsed();
    ensure(count == 645_120, || format!("signed_sjt(7) gave {count}"))?;
    let start = Instant::now();
    let mut p = Sjt::new(8);
    let mut count = 0u64;
    while p.advance() {
        count += 1;
        checksum += p.current()[0] as i64;
    }
    let plain = start.elapsed();
    ensure(count == 40_320, || format!("sjt(8) gave {count}"))?;
    std::hint::black_box(checksum);
    ensure(signed < Duration::from_secs(5), || {
        format!("signed_sjt(7) took {signed:.2?}")
    })?;
    ensure(plain < Duration::from_millis(500), || {
        format!("sjt(8) took {plain:.2?}")
    })?;
    Ok(format!("signed_sjt(7) {signed:.2?}, sjt(8) {plain:.2?}"))
}

fn main() {
    type Criterion = (u32, fn() -> Check, Duration);
    let criteria: [Criterion; 7] = [
        (1, criterion_1, Duration::from_secs(1)),
        (2, criterion_2, Duration::from_secs(30)),
        (3, criterion_3, Duration::from_secs(60)),
        (4, criterion_4, Duration::MAX),
        (5, criterion_5, Duration::from_secs(60)),
        (6, criterion_6, Duration::MAX),
        (7, criterion_7, Duration::MAX),
    ];
    let mut failed = Vec::new();
    for (k, check, budget) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let result = result.and_then(|detail| {
            if took > budget {
                Err(format!("{detail}; over the {budget:?} budget"))
            } else {
                Ok(detail)
            }
        });
        match result {
            Ok(detail) => println!("criterion {k}: PASS ({:.2}s) {detail}", took.as_secs_f64()),
            Err(why) => {
                println!("criterion {k}: FAIL ({:.2}s) {why}", took.as_secs_f64());
                failed.push(k);
            }
        }
    }
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
