//! End-to-end acceptance run over the default catalog. Prints one line per
//! criterion and exits nonzero if any fails.

mod support;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use ordergraph::census::{run_census, CensusConfig, CensusReport};
use ordergraph::graph::{are_isomorphic, are_isomorphic_within};
use ordergraph::oracle::{dihedral_line, quaternion_reduced_line, semidihedral_reduced_line};
use ordergraph::recognition::{
    brute_force_root_search, root_graph_for_clique_union, ForbiddenCatalog,
};
use ordergraph::supergraph::{
    build_variant, dominating_vertices, order_supergraph, power_graph, proper_supergraph,
    reduced_supergraph,
};
use ordergraph::{
    is_complement_of_line_graph, is_line_graph, FiniteGroup, Graph, GroupSpec, Variant,
};
use support::{has_induced_claw, is_square_free, krausz_line_graph, Facts};

const RUNTIME_LIMIT: Duration = Duration::from_secs(300);

struct Entry {
    name: String,
    spec: GroupSpec,
    group: FiniteGroup,
    facts: Facts,
}

struct Ctx {
    catalog: Vec<Entry>,
    report: CensusReport,
    census_time: Duration,
}

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&Ctx) -> Outcome);

fn check(failures: &[String], ok: String) -> Outcome {
    if failures.is_empty() {
        Ok(ok)
    } else {
        Err(failures.join("; "))
    }
}

fn census_line(ctx: &Ctx) -> Outcome {
    let mut bad = Vec::new();
    for e in &ctx.catalog {
        let expected = e.facts.eppo() && e.facts.primes().len() <= 2;
        let observed = is_line_graph(&order_supergraph(&e.group).graph).is_member;
        if expected != observed {
            bad.push(format!(
                "{}: expected {expected}, observed {observed}",
                e.name
            ));
        }
    }
    let s = &ctx.report.summary;
    if s.disagreements != 0 {
        bad.push(format!("census reports {} disagreements", s.disagreements));
    }
    if ctx.census_time > RUNTIME_LIMIT {
        bad.push(format!("census took {:?}", ctx.census_time));
    }
    check(
        &bad,
        format!(
            "{} groups, {} rows, 0 disagreements, census {:.2?}",
            ctx.catalog.len(),
            ctx.report.rows.len(),
            ctx.census_time
        ),
    )
}

fn census_proper_line(ctx: &Ctx) -> Outcome {
    let mut bad = Vec::new();
    let mut roots = 0;
    for e in &ctx.catalog {
        let graph = proper_supergraph(&e.group).graph;
        let expected = e.facts.is_z6() || e.facts.eppo();
        let observed = is_line_graph(&graph).is_member;
        if expected != observed {
            bad.push(format!(
                "{}: expected {expected}, observed {observed}",
                e.name
            ));
        }
        if observed && e.facts.eppo() {
            let Some(root) = root_graph_for_clique_union(&graph) else {
                bad.push(format!("{}: S* is not a union of cliques", e.name));
                continue;
            };
            let star_forest = root.components().iter().all(|c| {
                let degs: Vec<usize> = c.iter().map(|&u| root.degree(u)).collect();
                degs.iter().filter(|&&d| d > 1).count() <= 1
                    && root.induced_subgraph(c).unwrap().edge_count() == c.len() - 1
            });
            let iso = are_isomorphic_within(&root.line_graph(), &graph, 256).unwrap_or(false);
            if !(star_forest && iso) {
                bad.push(format!("{}: root not verified", e.name));
            }
            roots += 1;
        }
    }
    check(
        &bad,
        format!("{roots} star-forest roots verified by isomorphism"),
    )
}

fn census_reduced_line(ctx: &Ctx) -> Outcome {
    let mut bad = Vec::new();
    let (mut checked, mut skipped) = (0, BTreeSet::new());
    for e in &ctx.catalog {
        let f = &e.facts;
        if !f.dominatable() {
            skipped.insert(e.name.clone());
            continue;
        }
        checked += 1;
        let expected =
            f.p_group() || (f.primes().len() == 2 && f.orders.iter().all(|&o| is_square_free(o)));
        let observed = is_line_graph(&reduced_supergraph(&e.group).graph).is_member;
        if expected != observed {
            bad.push(format!(
                "{}: expected {expected}, observed {observed}",
                e.name
            ));
        }
    }
    let report_skips: BTreeSet<String> = ctx
        .report
        .rows
        .iter()
        .filter(|r| r.is_skip())
        .map(|r| r.group.clone())
        .collect();
    if report_skips != skipped || ctx.report.summary.hypothesis_skips != skipped.len() {
        bad.push(format!(
            "report skips {report_skips:?} differ from {skipped:?}"
        ));
    }
    let flagged: BTreeSet<&str> = ctx
        .report
        .probes
        .iter()
        .filter(|p| !p.is_clean())
        .map(|p| p.group.as_str())
        .collect();
    for e in &ctx.catalog {
        let needs_flag = match e.spec {
            GroupSpec::Dicyclic(_) => !e.facts.dominatable(),
            GroupSpec::Semidihedral(order) => order == 16,
            _ => false,
        };
        if needs_flag && !flagged.contains(e.name.as_str()) {
            bad.push(format!("{}: corollary probe not flagged", e.name));
        }
    }
    check(
        &bad,
        format!(
            "{checked} dominatable groups agree, {} skips, flagged probes {flagged:?}",
            skipped.len()
        ),
    )
}

fn census_complement(ctx: &Ctx) -> Outcome {
    let mut bad = Vec::new();
    let mut graphs = 0;
    for e in &ctx.catalog {
        let expected = e.facts.is_z6() || e.facts.p_group();
        for variant in [
            Variant::Supergraph,
            Variant::ProperSupergraph,
            Variant::ReducedSupergraph,
            Variant::Power,
        ] {
            let g = build_variant(&e.group, variant).graph;
            let direct = is_complement_of_line_graph(&g).is_member;
            if variant != Variant::Power && direct != expected {
                bad.push(format!(
                    "{} {}: expected {expected}",
                    e.name,
                    variant.as_str()
                ));
            }
            if direct != is_line_graph(&g.complement()).is_member {
                bad.push(format!("{} {}: duality fails", e.name, variant.as_str()));
            }
            graphs += 1;
        }
    }
    check(&bad, format!("{graphs} graphs, duality holds on all"))
}

fn completeness(ctx: &Ctx) -> Outcome {
    let bad: Vec<String> = ctx
        .catalog
        .iter()
        .filter(|e| order_supergraph(&e.group).graph.is_complete() != e.facts.p_group())
        .map(|e| e.name.clone())
        .collect();
    check(&bad, format!("{} groups, 0 exceptions", ctx.catalog.len()))
}

fn dominating_set(ctx: &Ctx) -> Outcome {
    let mut bad = Vec::new();
    let mut n = 0;
    for e in ctx.catalog.iter().filter(|e| !e.facts.p_group()) {
        let exp = e.facts.exponent();
        let expected: BTreeSet<usize> = (0..e.facts.order)
            .filter(|&x| x == e.facts.identity || e.facts.orders[x] == exp)
            .collect();
        let observed: BTreeSet<usize> = dominating_vertices(&order_supergraph(&e.group))
            .into_iter()
            .collect();
        if expected != observed {
            bad.push(format!("{}: {observed:?} != {expected:?}", e.name));
        }
        n += 1;
    }
    check(&bad, format!("{n} non-p-groups match exactly"))
}

fn corollaries(ctx: &Ctx) -> Outcome {
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    for e in &ctx.catalog {
        match e.spec {
            GroupSpec::Dihedral(order) => {
                let n = order / 2;
                let observed = is_line_graph(&order_supergraph(&e.group).graph).is_member;
                if dihedral_line(n) != observed {
                    bad.push(format!("{}: dihedral corollary", e.name));
                }
            }
            GroupSpec::Dicyclic(order) if (order / 4).is_power_of_two() => {
                let observed = is_line_graph(&reduced_supergraph(&e.group).graph).is_member;
                if !(quaternion_reduced_line(order / 4) && observed) {
                    bad.push(format!("{}: quaternion corollary", e.name));
                }
                seen.push(e.name.clone());
            }
            GroupSpec::Semidihedral(order) if (order / 8).is_power_of_two() => {
                let observed = is_line_graph(&reduced_supergraph(&e.group).graph).is_member;
                if !(semidihedral_reduced_line(order / 8) && observed) {
                    bad.push(format!("{}: semidihedral corollary", e.name));
                }
                seen.push(e.name.clone());
            }
            _ => {}
        }
    }
    let dihedral = ctx
        .catalog
        .iter()
        .filter(|e| matches!(e.spec, GroupSpec::Dihedral(_)))
        .count();
    if dihedral != 23 {
        bad.push(format!("expected 23 dihedral groups, found {dihedral}"));
    }
    if seen != ["Q8", "Q16", "SD16", "Q32", "SD32"] {
        bad.push(format!("power-of-two members {seen:?}"));
    }
    check(&bad, format!("D4..D48 agree; verified {}", seen.join(" ")))
}

fn z6_roots(_: &Ctx) -> Outcome {
    let z6 = "Z6".parse::<GroupSpec>().unwrap().build().unwrap();
    let proper = proper_supergraph(&z6).graph;
    let complement = order_supergraph(&z6).graph.complement();
    let mut bad = Vec::new();
    let mut sizes = Vec::new();
    for (what, target, edges) in [
        ("S*(Z6)", &proper, Some(5)),
        ("complement S(Z6)", &complement, None),
    ] {
        match brute_force_root_search(target, 10) {
            Ok(Some(h)) => {
                if !are_isomorphic(&h.line_graph(), target).unwrap() {
                    bad.push(format!("{what}: root fails isomorphism"));
                }
                if edges.is_some_and(|m| m != h.edge_count()) {
                    bad.push(format!("{what}: root has {} edges", h.edge_count()));
                }
                sizes.push(format!(
                    "{what}: {} vertices {} edges",
                    h.vertex_count(),
                    h.edge_count()
                ));
            }
            Ok(None) => bad.push(format!("{what}: no root")),
            Err(err) => bad.push(format!("{what}: {err}")),
        }
    }
    check(&bad, sizes.join(", "))
}

fn random_graph(rng: &mut StdRng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.2..0.8);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

fn recognizer_properties(_: &Ctx) -> Outcome {
    let mut rng = StdRng::seed_from_u64(20_240_611);
    let mut bad = Vec::new();
    let mut accepted = Vec::new();
    for i in 0..200 {
        let h = random_graph(&mut rng, 7);
        let l = h.line_graph();
        if !is_line_graph(&l).is_member {
            bad.push(format!("L(H) #{i} rejected"));
        }
        if has_induced_claw(&l) {
            bad.push(format!("L(H) #{i} contains a claw"));
        }
        accepted.push(l);
    }
    for m in ForbiddenCatalog::get().members() {
        if is_line_graph(&m.graph).is_member || krausz_line_graph(&m.graph) {
            bad.push(format!("catalog member {} accepted", m.index));
        }
    }
    let mut hereditary = 0;
    while hereditary < 50 {
        let l = &accepted[rng.gen_range(0..accepted.len())];
        if l.vertex_count() == 0 {
            continue;
        }
        let keep: Vec<usize> = (0..l.vertex_count())
            .filter(|_| rng.gen_bool(0.6))
            .collect();
        let sub = l.induced_subgraph(&keep).unwrap();
        if !is_line_graph(&sub).is_member || !krausz_line_graph(&sub) {
            bad.push(format!("induced subgraph {keep:?} rejected"));
        }
        hereditary += 1;
    }
    check(
        &bad,
        "200 line graphs accepted, 9 patterns rejected, 50 induced subgraphs accepted".into(),
    )
}

fn power_inside_supergraph(ctx: &Ctx) -> Outcome {
    let mut bad = Vec::new();
    let mut edges = 0;
    for e in &ctx.catalog {
        let p = power_graph(&e.group);
        let s = order_supergraph(&e.group);
        if p.element_of != s.element_of {
            bad.push(format!("{}: vertex sets differ", e.name));
            continue;
        }
        for (u, v) in p.graph.edges() {
            edges += 1;
            if !s.graph.has_edge(u, v) {
                bad.push(format!("{}: power edge {u}-{v} missing", e.name));
            }
        }
    }
    check(&bad, format!("{edges} power graph edges all present"))
}

fn main() -> ExitCode {
    let config = CensusConfig {
        workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
        ..CensusConfig::default()
    };
    let start = Instant::now();
    let report = run_census(&config).expect("census runs");
    let census_time = start.elapsed();
    let catalog = config
        .catalog()
        .into_iter()
        .map(|spec| {
            let group = spec.build().expect("catalog group builds");
            Entry {
                name: spec.to_string(),
                facts: Facts::of(&group),
                spec,
                group,
            }
        })
        .collect();
    let ctx = Ctx {
        catalog,
        report,
        census_time,
    };

    let criteria: [Criterion; 10] = [
        ("S(G) line graph census", census_line),
        ("S*(G) line graph census with roots", census_proper_line),
        ("S**(G) line graph census", census_reduced_line),
        ("complement census and duality", census_complement),
        ("S(G) complete iff p-group", completeness),
        ("dominating set of S(G)", dominating_set),
        ("family corollaries", corollaries),
        ("root graphs for Z6", z6_roots),
        ("recognizer properties", recognizer_properties),
        ("P(G) spanning subgraph of S(G)", power_inside_supergraph),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run(&ctx) {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
