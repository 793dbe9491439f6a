//! Plain-text tables for terminal output.

use std::fmt::{Display, Write as _};

use udim_core::bounds::{BoundRecord, BoundsReport, GraphKind};
use udim_core::constructions::{CertifiedConstruction, ResolvingObject};
use udim_core::scan::ScanResult;

pub struct Style {
    color: bool,
}

impl Style {
    pub fn new(color: bool) -> Self {
        Style { color }
    }

    fn paint(&self, code: &str, s: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    pub fn good(&self, s: &str) -> String {
        self.paint("32", s)
    }

    pub fn bad(&self, s: &str) -> String {
        self.paint("31", s)
    }

    pub fn dim(&self, s: &str) -> String {
        self.paint("2", s)
    }

    pub fn flag(&self, ok: bool) -> String {
        if ok {
            self.good("yes")
        } else {
            self.bad("no")
        }
    }
}

pub fn join<T: Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn opt<T: Display>(x: Option<T>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn chain(e: &anyhow::Error) -> String {
    e.chain().map(|c| c.to_string()).collect::<Vec<_>>().join(": ")
}

fn status(b: &BoundRecord, style: &Style) -> String {
    match (b.applicable, b.satisfied) {
        (false, _) => style.dim("n/a"),
        (true, Some(true)) => style.good("holds"),
        (true, Some(false)) => style.bad("VIOLATED"),
        (true, None) => "unchecked".to_string(),
    }
}

pub fn bounds(r: &BoundsReport, style: &Style) -> String {
    let mut out = String::new();
    let kind = match r.kind {
        GraphKind::Unicyclic => "unicyclic",
        GraphKind::Tree => "tree",
    };
    let _ = writeln!(out, "graph      {} ({kind}, n = {}, m = {})", r.id, r.n, r.edges);
    if let Some(c) = &r.cycle {
        let _ = writeln!(out, "cycle      {}", join(c));
    }
    let i = &r.invariants;
    let _ = writeln!(
        out,
        "invariants n1 = {}  ex = {}  rho = {}  kappa = {}  tau = {}  epsilon = {}  xi = {}  theta = {}",
        i.n1,
        i.ex,
        i.rho,
        i.kappa,
        i.tau,
        opt(i.epsilon),
        opt(i.xi),
        opt(i.theta)
    );
    let _ = writeln!(out, "dim        {}", opt(r.dim));
    if let Some(w) = &r.dim_witness {
        let _ = writeln!(out, "           resolving set {}", join(w));
    }
    let _ = writeln!(out, "pd         {}", opt(r.pd));
    if let Some(w) = &r.pd_witness {
        let parts: Vec<String> = w.iter().map(|p| format!("{{{}}}", join(p))).collect();
        let _ = writeln!(out, "           resolving partition {}", parts.join(" "));
    }

    if !r.trees.is_empty() {
        let _ = writeln!(out, "\nspanning trees");
        let _ = writeln!(out, "  {:<8} {:>3} {:>3} {:>5} {:>3} {:>3} {:>5} {:>6}  min-leaf", "deleted", "n1", "ex", "kappa", "tau", "xi", "theta", "dim(T)");
        for t in &r.trees {
            let (u, v) = t.deleted_edge;
            let _ = writeln!(
                out,
                "  {:<8} {:>3} {:>3} {:>5} {:>3} {:>3} {:>5} {:>6}  {}",
                format!("{u}-{v}"),
                t.n1,
                t.ex,
                t.kappa,
                t.tau,
                t.xi,
                t.theta,
                t.dim,
                if t.minimum_leaf { "*" } else { "" }
            );
        }
    }

    let _ = writeln!(out, "\nbounds");
    let _ = writeln!(out, "  {:<22} {:<6} {:<28} {:<7} status", "name", "tree", "bound", "value");
    for b in &r.bounds {
        let tree = b.tree.map_or_else(String::new, |(u, v)| format!("{u}-{v}"));
        let target = match b.target {
            udim_core::bounds::Target::Dim => "dim",
            udim_core::bounds::Target::Pd => "pd",
        };
        let _ = writeln!(
            out,
            "  {:<22} {:<6} {:<28} {:<7} {}",
            b.name,
            tree,
            format!("{target} {} {}", b.relation.symbol(), b.formula),
            opt(b.value),
            status(b, style)
        );
    }

    if !r.constructions.is_empty() {
        let _ = writeln!(out, "\nconstructions");
        for c in &r.constructions {
            let _ = writeln!(
                out,
                "  {:<14} size {:>3} <= {:<3} verified {}",
                c.name.name(),
                c.size,
                c.claimed_bound,
                style.flag(c.verified)
            );
        }
    }

    let _ = writeln!(out);
    if r.is_clean() {
        let _ = writeln!(out, "{}", style.good("no violations"));
    } else {
        for v in &r.violations {
            let _ = writeln!(out, "{} {v}", style.bad("violation:"));
        }
        for f in &r.construction_failures {
            let _ = writeln!(out, "{} {f}", style.bad("construction failure:"));
        }
    }
    out
}

pub fn construction(id: &str, c: &CertifiedConstruction, style: &Style) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph         {id}");
    let _ = writeln!(out, "construction  {}", c.name.name());
    match &c.object {
        ResolvingObject::Set(s) => {
            let _ = writeln!(out, "set           {}", join(s));
        }
        ResolvingObject::Partition(p) => {
            for (i, part) in p.parts().iter().enumerate() {
                let _ = writeln!(out, "part {:<8} {}", i + 1, join(part));
            }
        }
    }
    let _ = writeln!(out, "size          {}", c.size);
    let _ = writeln!(out, "bound         {}", c.claimed_bound);
    let _ = writeln!(out, "verified      {}", style.flag(c.verified));
    if let Some([u, v]) = c.witness {
        let _ = writeln!(out, "twin          {u} {v}");
    }
    out
}

pub fn scan(r: &ScanResult, style: &Style) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "instances     {}", r.instance_count);
    let _ = writeln!(out, "trees         {}", r.tree_count);
    let _ = writeln!(out, "pd cap        {}", r.metadata.pd_cap);
    let _ = writeln!(out, "prng          {}", r.metadata.prng);
    let _ = writeln!(out, "\ngap pd(G) - pd(T)   trees");
    for g in &r.gap_histogram {
        let _ = writeln!(out, "  {:>4}              {}", g.gap, g.trees);
    }
    let _ = writeln!(
        out,
        "\nconjecture violations (gap >= {}): {}",
        r.metadata.conjecture_gap,
        r.conjecture_violations.len()
    );
    for v in &r.conjecture_violations {
        let (a, b) = v.deleted_edge;
        let _ = writeln!(out, "  {}  T = G - {a}-{b}  pd(G) = {}  pd(T) = {}", v.id, v.pd_graph, v.pd_tree);
    }
    let count = r.proposition_violations.len();
    let line = format!("proposition violations (gap >= {}): {count}", r.metadata.proposition_gap);
    let _ = writeln!(out, "{}", if count == 0 { style.good(&line) } else { style.bad(&line) });
    for v in &r.proposition_violations {
        let (a, b) = v.deleted_edge;
        let _ = writeln!(out, "  {}  T = G - {a}-{b}  pd(G) = {}  pd(T) = {}", v.id, v.pd_graph, v.pd_tree);
    }
    out
}
