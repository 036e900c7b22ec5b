use std::collections::HashMap;

use super::ast::{Claim, Expr, JoinArgs, Script};
use super::eval::{eval_expr, Bindings};
use crate::constructions::{ore_join, JoinKind, JoinResult};
use crate::digraph::Family;
use crate::{Digraph, Result, Vertex};

/// Builds a script while evaluating it, so generators can inspect every
/// intermediate digraph and the join vertex maps.
#[derive(Debug, Clone, Default)]
pub struct ScriptBuilder {
    script: Script,
    env: Bindings,
    counters: HashMap<String, usize>,
}

impl ScriptBuilder {
    pub fn new() -> Self {
        ScriptBuilder::default()
    }

    /// `hint` if unused, else `hint2`, `hint3`, ...
    fn fresh(&mut self, hint: &str) -> String {
        let c = self.counters.entry(hint.to_string()).or_insert(0);
        *c += 1;
        if *c == 1 {
            hint.to_string()
        } else {
            format!("{hint}{c}")
        }
    }

    fn record(&mut self, hint: &str, expr: Expr, d: Digraph) -> String {
        let mut name = self.fresh(hint);
        while self.env.get(&name).is_some() {
            name = self.fresh(hint);
        }
        self.script.push_step(name.clone(), expr);
        self.env.insert(name.clone(), d);
        name
    }

    pub fn graph(&self, name: &str) -> &Digraph {
        self.env.get(name).expect("builder name is bound")
    }

    pub fn bind(&mut self, hint: &str, expr: Expr) -> Result<String> {
        let d = eval_expr(&expr, &self.env, None)?;
        Ok(self.record(hint, expr, d))
    }

    pub fn axiom(&mut self, hint: &str, fam: Family) -> Result<String> {
        self.bind(hint, Expr::Axiom(fam))
    }

    #[allow(clippy::too_many_arguments)]
    pub fn orejoin(
        &mut self,
        hint: &str,
        kind: JoinKind,
        left: &str,
        (v1, u1): (Vertex, Vertex),
        right: &str,
        (v2, u2): (Vertex, Vertex),
        map: Vec<(Vertex, Vertex)>,
    ) -> Result<(String, JoinResult)> {
        let r = ore_join(
            kind,
            self.graph(left),
            v1,
            u1,
            self.graph(right),
            v2,
            u2,
            &map,
        )?;
        let mut map = map;
        map.sort_unstable();
        let args = JoinArgs {
            left: left.to_string(),
            v1,
            u1,
            right: right.to_string(),
            v2,
            u2,
        };
        let name = self.record(hint, Expr::OreJoin(kind, args, map), r.result.clone());
        Ok((name, r))
    }

    pub fn relabel(&mut self, hint: &str, src: &str, perm: Vec<Vertex>) -> Result<String> {
        self.bind(hint, Expr::Relabel(src.to_string(), perm))
    }

    pub fn check(&mut self, name: &str, claim: Claim) {
        self.script.push_check(name.to_string(), claim);
    }

    pub fn script(&self) -> &Script {
        &self.script
    }

    pub fn bindings(&self) -> &Bindings {
        &self.env
    }

    pub fn into_script(self) -> Script {
        self.script
    }
}
