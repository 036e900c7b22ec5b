use std::fmt;

use crate::constructions::JoinKind;
use crate::digraph::Family;
use crate::Vertex;

/// Operands of a two-sided join: `(left, v1, u1)` and `(right, v2, u2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JoinArgs {
    pub left: String,
    pub v1: Vertex,
    pub u1: Vertex,
    pub right: String,
    pub v2: Vertex,
    pub u2: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Axiom(Family),
    Load(String),
    Hajos(JoinArgs),
    BHajos(JoinArgs),
    Dirac(String, String),
    Identify(String, Vec<Vertex>),
    OreJoin(JoinKind, JoinArgs, Vec<(Vertex, Vertex)>),
    /// `perm[i]` is the new label of vertex `i`.
    Relabel(String, Vec<Vertex>),
}

impl Expr {
    /// Names this expression reads.
    pub fn operands(&self) -> Vec<&str> {
        match self {
            Expr::Axiom(_) | Expr::Load(_) => vec![],
            Expr::Hajos(j) | Expr::BHajos(j) | Expr::OreJoin(_, j, _) => vec![&j.left, &j.right],
            Expr::Dirac(a, b) => vec![a, b],
            Expr::Identify(a, _) | Expr::Relabel(a, _) => vec![a],
        }
    }

    pub fn keyword(&self) -> &'static str {
        match self {
            Expr::Axiom(_) => "axiom",
            Expr::Load(_) => "load",
            Expr::Hajos(_) => "hajos",
            Expr::BHajos(_) => "bhajos",
            Expr::Dirac(..) => "dirac",
            Expr::Identify(..) => "identify",
            Expr::OreJoin(..) => "orejoin",
            Expr::Relabel(..) => "relabel",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Step {
    pub name: String,
    pub expr: Expr,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Claim {
    ChiAtLeast(usize),
    ChiEquals(usize),
    Critical(usize),
    IsoFile(String),
    IsoFamily(Family),
    Strong,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Check {
    pub name: String,
    pub claim: Claim,
}

/// A parsed or generated derivation. Source line numbers are kept on the
/// side and do not take part in equality.
#[derive(Debug, Clone, Default)]
pub struct Script {
    pub steps: Vec<Step>,
    pub checks: Vec<Check>,
    pub(crate) step_lines: Vec<usize>,
    pub(crate) check_lines: Vec<usize>,
}

impl PartialEq for Script {
    fn eq(&self, other: &Self) -> bool {
        self.steps == other.steps && self.checks == other.checks
    }
}

impl Eq for Script {}

impl Script {
    pub fn new() -> Self {
        Script::default()
    }

    pub fn push_step(&mut self, name: impl Into<String>, expr: Expr) {
        self.steps.push(Step {
            name: name.into(),
            expr,
        });
        self.step_lines.push(0);
    }

    pub fn push_check(&mut self, name: impl Into<String>, claim: Claim) {
        self.checks.push(Check {
            name: name.into(),
            claim,
        });
        self.check_lines.push(0);
    }

    /// Source line of step `i`, 0 for generated steps.
    pub fn step_line(&self, i: usize) -> usize {
        self.step_lines.get(i).copied().unwrap_or(0)
    }

    pub fn check_line(&self, i: usize) -> usize {
        self.check_lines.get(i).copied().unwrap_or(0)
    }

    /// Name bound by the last step.
    pub fn final_name(&self) -> Option<&str> {
        self.steps.last().map(|s| s.name.as_str())
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

fn write_join(f: &mut fmt::Formatter<'_>, j: &JoinArgs) -> fmt::Result {
    write!(
        f,
        "{} ({},{}) {} ({},{})",
        j.left, j.v1, j.u1, j.right, j.v2, j.u2
    )
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Axiom(fam) => write!(f, "{fam}"),
            Expr::Load(p) => write!(f, "load \"{p}\""),
            Expr::Hajos(j) => {
                f.write_str("hajos ")?;
                write_join(f, j)
            }
            Expr::BHajos(j) => {
                f.write_str("bhajos ")?;
                write_join(f, j)
            }
            Expr::Dirac(a, b) => write!(f, "dirac {a} {b}"),
            Expr::Identify(a, set) => {
                write!(f, "identify {a} {{")?;
                write_list(f, set)?;
                f.write_str("}")
            }
            Expr::OreJoin(kind, j, map) => {
                let k = match kind {
                    JoinKind::Directed => "d",
                    JoinKind::Bidirected => "b",
                };
                write!(f, "orejoin {k} ")?;
                write_join(f, j)?;
                f.write_str(" map {")?;
                let pairs: Vec<String> = map.iter().map(|(a, b)| format!("{a}->{b}")).collect();
                write_list(f, &pairs)?;
                f.write_str("}")
            }
            Expr::Relabel(a, perm) => {
                write!(f, "relabel {a} [")?;
                write_list(f, perm)?;
                f.write_str("]")
            }
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::ChiAtLeast(k) => write!(f, "chi >= {k}"),
            Claim::ChiEquals(k) => write!(f, "chi = {k}"),
            Claim::Critical(k) => write!(f, "critical {k}"),
            Claim::IsoFile(p) => write!(f, "iso \"{p}\""),
            Claim::IsoFamily(fam) => write!(f, "iso {fam}"),
            Claim::Strong => f.write_str("strong"),
        }
    }
}

impl fmt::Display for Script {
    /// Canonical spacing: steps first, then checks, one per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(f, "let {} = {}", s.name, s.expr)?;
        }
        for c in &self.checks {
            writeln!(f, "check {} {}", c.name, c.claim)?;
        }
        Ok(())
    }
}
