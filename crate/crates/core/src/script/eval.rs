use std::collections::HashMap;
use std::path::{Path, PathBuf};

use super::ast::{Expr, JoinArgs, Script};
use crate::constructions::{self, JoinKind, JoinResult};
use crate::digraph::io::read_dgf_file;
use crate::{Digraph, Error, Result};

/// Name → digraph bindings produced by evaluation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Bindings {
    map: HashMap<String, Digraph>,
}

impl Bindings {
    pub fn get(&self, name: &str) -> Option<&Digraph> {
        self.map.get(name)
    }

    pub(crate) fn insert(&mut self, name: String, d: Digraph) {
        self.map.insert(name, d);
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    fn operand(&self, name: &str) -> Result<&Digraph> {
        self.map
            .get(name)
            .ok_or_else(|| Error::PreconditionFailed(format!("undefined name `{name}`")))
    }
}

pub(crate) fn resolve(base: Option<&Path>, path: &str) -> PathBuf {
    match base {
        Some(b) if Path::new(path).is_relative() => b.join(path),
        _ => PathBuf::from(path),
    }
}

fn join_of(
    env: &Bindings,
    kind: JoinKind,
    j: &JoinArgs,
    map: &[(usize, usize)],
) -> Result<JoinResult> {
    let a = env.operand(&j.left)?;
    let b = env.operand(&j.right)?;
    constructions::ore_join(kind, a, j.v1, j.u1, b, j.v2, j.u2, map)
}

/// Evaluates one expression against existing bindings. Relative `load`
/// paths resolve against `base`.
pub(crate) fn eval_expr(expr: &Expr, env: &Bindings, base: Option<&Path>) -> Result<Digraph> {
    Ok(match expr {
        Expr::Axiom(fam) => fam.build()?,
        Expr::Load(p) => read_dgf_file(&resolve(base, p))?,
        Expr::Hajos(j) => join_of(env, JoinKind::Directed, j, &[])?.result,
        Expr::BHajos(j) => join_of(env, JoinKind::Bidirected, j, &[])?.result,
        Expr::OreJoin(kind, j, map) => join_of(env, *kind, j, map)?.result,
        Expr::Dirac(a, b) => constructions::dirac_join(env.operand(a)?, env.operand(b)?).result,
        Expr::Identify(a, set) => constructions::identify(env.operand(a)?, set)?.result,
        Expr::Relabel(a, perm) => env.operand(a)?.relabel(perm)?,
    })
}

/// Runs every step in order; fails at the first violating step.
pub fn evaluate_script(script: &Script, base: Option<&Path>) -> Result<Bindings> {
    let mut env = Bindings::default();
    for (i, step) in script.steps.iter().enumerate() {
        let d = eval_expr(&step.expr, &env, base).map_err(|e| Error::Step {
            name: step.name.clone(),
            line: script.step_line(i),
            source: Box::new(e),
        })?;
        env.insert(step.name.clone(), d);
    }
    Ok(env)
}
