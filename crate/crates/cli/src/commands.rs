use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use ccmap::cc::{
    find_violation, search_cc, EdgeMapping, Profile, SearchConfig, SearchMode, SearchStatus,
    VerifyMode,
};
use ccmap::colorflow::{is_critical_snark, is_snark};
use ccmap::constructions::{antichain_member, named_graph, poset_path_graph, DirectedPath};
use ccmap::graph::{cyclic_edge_connectivity, girth, is_bridgeless, is_edge_transitive, MultiGraph};
use ccmap::io::{
    certificate_from_json, graph_to_json, load_graph, MappingCertificate, ProvenanceJson,
    SearchOutcomeJson,
};

use crate::{CliError, Outcome, EXIT_BUDGET, EXIT_CLAIM_FAILS, EXIT_OK};

pub enum GenSpec {
    Named(String),
    Blanusa(u8),
    Antichain(usize),
    PosetPath(String),
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))
}

/// Builds the graph and writes it as Graph JSON, to `out` or stdout. Tree
/// snarks also get a side table next to `out` (`<out>.provenance.json`).
pub fn gen(spec: &GenSpec, out: Option<&Path>) -> Result<Outcome, CliError> {
    let (graph, side) = match spec {
        GenSpec::Named(name) => (named_graph(name)?, None),
        GenSpec::Blanusa(which @ (1 | 2)) => (named_graph(&format!("blanusa{which}"))?, None),
        GenSpec::Blanusa(which) => {
            return Err(CliError::input(format!("no Blanusa snark number {which}; use 1 or 2")))
        }
        GenSpec::Antichain(n) => {
            let h = antichain_member(*n)?;
            (h.graph.clone(), Some(ProvenanceJson::of(&h)))
        }
        GenSpec::PosetPath(word) => {
            let h = poset_path_graph(&word.parse::<DirectedPath>()?)?;
            (h.graph.clone(), Some(ProvenanceJson::of(&h)))
        }
    };
    let json = graph_to_json(&graph);
    let Some(out) = out else {
        return Ok(Outcome::ok(json));
    };
    write(out, &json)?;
    let mut msg = format!(
        "wrote {} (n={}, m={})",
        out.display(),
        graph.vertex_count(),
        graph.edge_count()
    );
    if let Some(side) = side {
        let mut p = out.as_os_str().to_owned();
        p.push(".provenance.json");
        let p = PathBuf::from(p);
        write(&p, &serde_json::to_string(&side).expect("side table json"))?;
        msg.push_str(&format!("\nwrote {}", p.display()));
    }
    Ok(Outcome::ok(msg))
}

#[derive(Default)]
pub struct CheckFlags {
    pub snark: bool,
    pub critical: bool,
    pub bridgeless: bool,
    pub girth: bool,
    pub cyclic_connectivity: bool,
    pub edge_transitive: bool,
    pub assert: bool,
}

/// Prints `key: value` lines. With `assert`, any boolean property that
/// comes out false gives exit code 2.
pub fn check(graph: &str, flags: &CheckFlags) -> Result<Outcome, CliError> {
    let g = load_graph(graph)?;
    let mut lines = vec![format!("n: {}", g.vertex_count()), format!("m: {}", g.edge_count())];
    let mut failed = false;
    let mut flag = |key: &str, value: bool, lines: &mut Vec<String>| {
        failed |= !value;
        lines.push(format!("{key}: {value}"));
    };
    if flags.snark {
        flag("snark", is_snark(&g)?, &mut lines);
    }
    if flags.critical {
        let v = is_snark(&g)? && is_critical_snark(&g)?;
        flag("critical", v, &mut lines);
    }
    if flags.bridgeless {
        flag("bridgeless", is_bridgeless(&g), &mut lines);
    }
    if flags.edge_transitive {
        flag("edge-transitive", is_edge_transitive(&g)?, &mut lines);
    }
    if flags.girth {
        lines.push(format!("girth: {}", girth(&g).map_or("none".into(), |x| x.to_string())));
    }
    if flags.cyclic_connectivity {
        lines.push(format!(
            "cyclic-connectivity: {}",
            cyclic_edge_connectivity(&g).map_or("infinity".into(), |x| x.to_string())
        ));
    }
    let code = if flags.assert && failed { EXIT_CLAIM_FAILS } else { EXIT_OK };
    Ok(Outcome { text: lines.join("\n"), code })
}

/// Reads a mapping file: either a certificate or a bare array of images.
fn read_mapping(path: &Path, g: &MultiGraph, h: &MultiGraph) -> Result<EdgeMapping, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    if let Ok(map) = serde_json::from_str::<Vec<usize>>(&text) {
        return Ok(EdgeMapping::new(g, h, map)?);
    }
    Ok(certificate_from_json(&text)?.to_mapping(g, h)?)
}

/// Prints `true`, or `false` and the violated cycle or star as JSON.
pub fn cc_verify(g: &str, h: &str, map: &Path) -> Result<Outcome, CliError> {
    let (gg, hh) = (load_graph(g)?, load_graph(h)?);
    let f = read_mapping(map, &gg, &hh)?;
    match find_violation(&gg, &hh, &f, VerifyMode::Both)? {
        None => Ok(Outcome::ok("true".into())),
        Some(v) => Ok(Outcome {
            text: format!("false\n{}", serde_json::to_string(&v).expect("violation json")),
            code: EXIT_CLAIM_FAILS,
        }),
    }
}

pub struct SearchArgs {
    pub mode: SearchMode,
    pub budget_secs: Option<f64>,
    pub workers: usize,
    pub profile: Profile,
    pub out_dir: Option<PathBuf>,
}

/// Prints the outcome as JSON and writes one certificate per mapping into
/// `out_dir`. Exit code 0 when a mapping exists, 2 when the search finished
/// without one, 3 when a budget ran out first.
pub fn cc_search(g: &str, h: &str, args: &SearchArgs) -> Result<Outcome, CliError> {
    let (gg, hh) = (load_graph(g)?, load_graph(h)?);
    let cfg = SearchConfig {
        mode: args.mode,
        time_budget: args.budget_secs.map(Duration::from_secs_f64),
        node_budget: None,
        workers: args.workers,
        profile: args.profile,
    };
    let out = search_cc(&gg, &hh, &cfg)?;
    if let Some(dir) = &args.out_dir {
        fs::create_dir_all(dir)
            .map_err(|e| CliError::input(format!("cannot create {}: {e}", dir.display())))?;
        for (i, f) in out.mappings.iter().enumerate() {
            let cert = MappingCertificate::new(f, &gg, &hh, (Some(g), Some(h)));
            let text = serde_json::to_string(&cert).expect("certificate json");
            write(&dir.join(format!("certificate-{i}.json")), &text)?;
        }
    }
    let code = if out.count > 0 {
        EXIT_OK
    } else if out.status == SearchStatus::Complete {
        EXIT_CLAIM_FAILS
    } else {
        EXIT_BUDGET
    };
    let text = serde_json::to_string(&SearchOutcomeJson::from(&out)).expect("outcome json");
    Ok(Outcome { text, code })
}
