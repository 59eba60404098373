use std::io::Read;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use extact::activity::ActivityTable;
use extact::complexes::{reduced_complex, restriction_sets_predicted, VertexLabels};
use extact::{
    classify_topology, external_activity_complex, independence_complex, shelling_check,
    tutte_polynomial, BasisOrder, BasisPoset, ComplexKind, ElementSet, MatroidDescriptor,
    MatroidError, OrderedMatroid, ShellingReport, SimplicialComplex, Topology,
};

use crate::args::{Cli, Command, ComplexArgs, OrderSpec, OrdersArgs, ShellArgs};
use crate::error::CliError;
use crate::worked_example;

pub const DEFAULT_MAX_N: usize = 12;

/// Result of a successful command: the JSON to print and the exit status.
pub struct Output {
    pub json: Value,
    pub exit: u8,
}

impl Output {
    fn ok(json: Value) -> Self {
        Output { json, exit: 0 }
    }
}

pub fn run(cli: &Cli, max_n: usize) -> Result<Output, CliError> {
    if let Command::ReproducePaper = cli.command {
        let report = worked_example::reproduce();
        let exit = if report.pass { 0 } else { 1 };
        return Ok(Output {
            json: to_value(&report),
            exit,
        });
    }
    let path = cli
        .input
        .as_deref()
        .ok_or_else(|| CliError::InvalidArgument("--input is required".into()))?;
    let m = load_matroid(path, max_n)?;
    let json = match &cli.command {
        Command::Validate => validate(&m),
        Command::Activity => activity(&m),
        Command::Tutte => tutte(&m),
        Command::Orders(args) => orders(&m, args, cli.seed)?,
        Command::Complex(args) => complex(&m, args),
        Command::ShellCheck(args) => shell_check(&m, args, cli.seed)?,
        Command::Hvector(args) => hvector(&m, args)?,
        Command::Topology => topology(&m),
        Command::ReproducePaper => unreachable!("handled above"),
    };
    Ok(Output::ok(json))
}

fn read_text(path: &Path) -> Result<String, CliError> {
    let io = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

pub fn load_matroid(path: &Path, max_n: usize) -> Result<OrderedMatroid, CliError> {
    let text = read_text(path)?;
    let desc: MatroidDescriptor = serde_json::from_str(&text)
        .map_err(|e| CliError::parse(format!("matroid descriptor {}", path.display()), e))?;
    Ok(desc.to_matroid(max_n)?)
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("output types serialize")
}

fn plain(s: ElementSet) -> Vec<i64> {
    VertexLabels::Plain.labels(s)
}

fn validate(m: &OrderedMatroid) -> Value {
    json!({
        "valid": true,
        "n": m.n(),
        "rank": m.rank(),
        "order": m.order(),
        "bases": m.bases().len(),
        "loops": plain(m.loops()),
        "coloops": plain(m.coloops()),
        "circuits": m.circuits().iter().map(|&c| plain(c)).collect::<Vec<_>>(),
    })
}

#[derive(Serialize)]
struct ActivityRow {
    basis: Vec<i64>,
    ep: Vec<i64>,
    ea: Vec<i64>,
    ip: Vec<i64>,
    ia: Vec<i64>,
}

fn activity(m: &OrderedMatroid) -> Value {
    let rows: Vec<ActivityRow> = ActivityTable::new(m)
        .rows()
        .iter()
        .map(|r| ActivityRow {
            basis: plain(r.basis),
            ep: plain(r.ep),
            ea: plain(r.ea),
            ip: plain(r.ip),
            ia: plain(r.ia),
        })
        .collect();
    to_value(&rows)
}

#[derive(Serialize)]
struct Term {
    i: usize,
    j: usize,
    c: u64,
}

fn tutte(m: &OrderedMatroid) -> Value {
    let terms: Vec<Term> = tutte_polynomial(m)
        .terms()
        .into_iter()
        .map(|(i, j, c)| Term { i, j, c })
        .collect();
    to_value(&terms)
}

fn orders(m: &OrderedMatroid, args: &OrdersArgs, seed: u64) -> Result<Value, CliError> {
    let poset = BasisPoset::build(m, args.kind)?;
    let mut out = json!({
        "kind": args.kind.name(),
        "bases": m.bases().iter().map(|&b| plain(b)).collect::<Vec<_>>(),
        "hasse": poset.hasse().iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
    });
    if let Some(limit) = args.extensions {
        if limit == 0 {
            return Err(CliError::InvalidArgument("--extensions must be positive".into()));
        }
        let ext = poset.extension_indices(limit, limit, seed);
        out["exhaustive"] = json!(ext.exhaustive);
        out["extensions"] = json!(ext.orders);
    }
    Ok(out)
}

fn build_complex(m: &OrderedMatroid, args: &ComplexArgs) -> SimplicialComplex {
    match (args.which, args.reduced) {
        (ComplexKind::In, false) => independence_complex(m),
        (ComplexKind::In, true) => {
            let k = independence_complex(m).without_cone_points();
            SimplicialComplex::from_facets(k.labels(), ElementSet::EMPTY, k.facets().to_vec())
                .expect("removing common vertices keeps an antichain")
        }
        (ComplexKind::Act, false) => external_activity_complex(m),
        (ComplexKind::Act, true) => reduced_complex(m),
    }
}

fn which_name(k: ComplexKind) -> &'static str {
    match k {
        ComplexKind::In => "in",
        ComplexKind::Act => "act",
    }
}

fn complex(m: &OrderedMatroid, args: &ComplexArgs) -> Value {
    let k = build_complex(m, args);
    let labels = k.labels();
    let sets = |v: &[ElementSet]| v.iter().map(|&s| labels.labels(s)).collect::<Vec<_>>();
    json!({
        "which": which_name(args.which),
        "reduced": args.reduced,
        "vertices": labels.labels(k.ground()),
        "dimension": k.dimension(),
        "facets": sets(k.facets()),
        "cone_points": labels.labels(k.cone_points()),
        "minimal_nonfaces": sets(&k.minimal_nonfaces()),
    })
}

fn report_json(
    m: &OrderedMatroid,
    k: &SimplicialComplex,
    idx: &[usize],
    report: &ShellingReport,
    predicted: Option<Vec<ElementSet>>,
) -> Value {
    let labels = k.labels();
    json!({
        "order": idx.iter().map(|&i| plain(m.bases()[i])).collect::<Vec<_>>(),
        "is_shelling": report.is_shelling,
        "failure_index": report.failure_index,
        "failure_witness": report.failure_witness,
        "restriction_sets": report.restriction_sets.iter().map(|&r| labels.labels(r)).collect::<Vec<_>>(),
        "new_face_counts": report.new_face_counts,
        "predicted_restriction_sets": predicted.map(|p| p.iter().map(|&r| labels.labels(r)).collect::<Vec<_>>()),
    })
}

fn parse_order_file(m: &OrderedMatroid, path: &Path) -> Result<BasisOrder, CliError> {
    let text = read_text(path)?;
    let lists: Vec<Vec<i64>> = serde_json::from_str(&text)
        .map_err(|e| CliError::parse(format!("basis order {}", path.display()), e))?;
    let mut seq = Vec::with_capacity(lists.len());
    for list in lists {
        let mut s = ElementSet::EMPTY;
        for e in list {
            if e < 1 || !m.ground().contains(e as usize) {
                return Err(MatroidError::InvalidElement(e).into());
            }
            s.insert(e as usize);
        }
        seq.push(s);
    }
    Ok(BasisOrder::new(seq))
}

fn shell_check(m: &OrderedMatroid, args: &ShellArgs, seed: u64) -> Result<Value, CliError> {
    let k = build_complex(m, &args.complex);
    // restriction sets survive cone-point removal, so the prediction applies to both
    let predict = |idx: &[usize]| {
        restriction_sets_predicted(m, &BasisOrder::from_indices(m.bases(), idx), args.complex.which)
            .ok()
    };
    let single = |idx: Vec<usize>| -> Result<Value, CliError> {
        let report = shelling_check(&k, &idx)?;
        Ok(report_json(m, &k, &idx, &report, predict(&idx)))
    };
    match &args.order {
        OrderSpec::Lex => single((0..m.bases().len()).collect()),
        OrderSpec::File(path) => {
            let ord = parse_order_file(m, path)?;
            let idx = ord
                .indices_in(m.bases())
                .ok_or(extact::OrderError::WrongBasisSet)?;
            single(idx)
        }
        OrderSpec::Sample(kind, count) => {
            let poset = BasisPoset::build(m, *kind)?;
            let ext = poset.extension_indices(*count, *count, seed);
            let mut reports = Vec::with_capacity(ext.orders.len());
            let mut failures = 0;
            for idx in &ext.orders {
                let report = shelling_check(&k, idx)?;
                failures += usize::from(!report.is_shelling);
                reports.push(report_json(m, &k, idx, &report, predict(idx)));
            }
            Ok(json!({
                "kind": kind.name(),
                "exhaustive": ext.exhaustive,
                "checked": reports.len(),
                "failures": failures,
                "reports": reports,
            }))
        }
    }
}

fn hvector(m: &OrderedMatroid, args: &ComplexArgs) -> Result<Value, CliError> {
    let k = build_complex(m, args);
    let h = k.h_vector()?;
    let t = tutte_polynomial(m).shelling_coefficients(m.rank());
    Ok(json!({
        "which": which_name(args.which),
        "reduced": args.reduced,
        "dimension": k.dimension(),
        "f": k.f_vector(),
        "h": h,
        "tutte_x1": t,
        "euler_characteristic": k.euler_characteristic(),
        "reduced_euler_characteristic": k.reduced_euler_characteristic(),
    }))
}

pub fn topology_json(t: Topology) -> Value {
    match t {
        Topology::ContractibleU31 => json!({"class": "contractible-u31"}),
        Topology::SphereOfDim(d) => json!({"class": "sphere", "dim": d}),
    }
}

fn topology(m: &OrderedMatroid) -> Value {
    topology_json(classify_topology(m))
}
