//! Line-oriented parser for `.hdv` derivation scripts.
//!
//! `#` starts a comment that runs to the end of the line; `;` may separate
//! several statements on one line.

use std::collections::HashSet;
use std::fmt;

use super::ast::{Check, Claim, Expr, JoinArgs, Script, Step};
use crate::constructions::JoinKind;
use crate::digraph::Family;
use crate::Vertex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    DuplicateName,
    UndefinedName,
    MalformedVertexRef,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
    /// Offending token text (empty at end of line).
    pub token: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match &self.kind {
            ParseErrorKind::Syntax(expected) => format!("syntax error, expected {expected}"),
            ParseErrorKind::DuplicateName => "name already bound".to_string(),
            ParseErrorKind::UndefinedName => "undefined name".to_string(),
            ParseErrorKind::MalformedVertexRef => "malformed vertex reference".to_string(),
        };
        let tok = if self.token.is_empty() {
            "end of line".to_string()
        } else {
            format!("`{}`", self.token)
        };
        write!(
            f,
            "line {}, column {}: {what} at {tok}",
            self.line, self.col
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Str(String),
    Sym(&'static str),
}

impl Tok {
    fn text(&self) -> String {
        match self {
            Tok::Ident(s) | Tok::Int(s) => s.clone(),
            Tok::Str(s) => format!("\"{s}\""),
            Tok::Sym(s) => (*s).to_string(),
        }
    }
}

const SYMS: [&str; 11] = ["->", ">=", "=", "(", ")", ",", "{", "}", "[", "]", ";"];

fn lex(line_no: usize, line: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = line.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    let err = |col: usize, tok: String, what: &str| ParseError {
        line: line_no,
        col,
        kind: ParseErrorKind::Syntax(what.into()),
        token: tok,
    };
    'outer: while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c == '#' {
            break;
        }
        if c == '"' {
            let start = i + 1;
            let mut j = start;
            while j < chars.len() && chars[j] != '"' {
                j += 1;
            }
            if j == chars.len() {
                return Err(err(col, chars[i..].iter().collect(), "closing quote"));
            }
            toks.push((Tok::Str(chars[start..j].iter().collect()), col));
            i = j + 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            toks.push((Tok::Int(chars[i..j].iter().collect()), col));
            i = j;
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut j = i;
            while j < chars.len() && (chars[j].is_alphanumeric() || chars[j] == '_') {
                j += 1;
            }
            toks.push((Tok::Ident(chars[i..j].iter().collect()), col));
            i = j;
            continue;
        }
        for s in SYMS {
            let sc: Vec<char> = s.chars().collect();
            if chars[i..].starts_with(&sc) {
                toks.push((Tok::Sym(s), col));
                i += sc.len();
                continue 'outer;
            }
        }
        return Err(err(col, c.to_string(), "a token"));
    }
    Ok(toks)
}

struct Cursor<'a> {
    line: usize,
    toks: &'a [(Tok, usize)],
    pos: usize,
    end_col: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |&(_, c)| c)
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            col: self.col(),
            kind,
            token: self.peek().map(Tok::text).unwrap_or_default(),
        }
    }

    fn syntax(&self, expected: &str) -> ParseError {
        self.error(ParseErrorKind::Syntax(expected.into()))
    }

    fn sym(&mut self, s: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(&Tok::Sym(s)) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(&format!("`{s}`")))
        }
    }

    fn eat_sym(&mut self, s: &'static str) -> bool {
        if self.peek() == Some(&Tok::Sym(s)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.syntax(what)),
        }
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        match self.peek() {
            Some(Tok::Int(s)) => {
                let v = s.parse().map_err(|_| self.syntax("an integer"))?;
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.syntax("an integer")),
        }
    }

    fn vertex(&mut self) -> Result<Vertex, ParseError> {
        match self.peek() {
            Some(Tok::Int(s)) => {
                let v = s
                    .parse()
                    .map_err(|_| self.error(ParseErrorKind::MalformedVertexRef))?;
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.error(ParseErrorKind::MalformedVertexRef)),
        }
    }

    fn string(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Str(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.syntax("a quoted path")),
        }
    }

    fn pair(&mut self) -> Result<(Vertex, Vertex), ParseError> {
        if !self.eat_sym("(") {
            return Err(self.error(ParseErrorKind::MalformedVertexRef));
        }
        let a = self.vertex()?;
        if !self.eat_sym(",") {
            return Err(self.error(ParseErrorKind::MalformedVertexRef));
        }
        let b = self.vertex()?;
        if !self.eat_sym(")") {
            return Err(self.error(ParseErrorKind::MalformedVertexRef));
        }
        Ok((a, b))
    }

    /// Comma-separated items up to `close`; the opening bracket is consumed.
    fn list<T>(
        &mut self,
        close: &'static str,
        mut item: impl FnMut(&mut Self) -> Result<T, ParseError>,
    ) -> Result<Vec<T>, ParseError> {
        let mut out = Vec::new();
        if self.eat_sym(close) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat_sym(close) {
                return Ok(out);
            }
            if !self.eat_sym(",") {
                return Err(self.error(ParseErrorKind::MalformedVertexRef));
            }
        }
    }

    fn family(&mut self, kw: &str) -> Result<Option<Family>, ParseError> {
        let ctor: fn(usize) -> Family = match kw {
            "bk" => Family::BidirectedComplete,
            "dc" => Family::DirectedCycle,
            "bc" => Family::BidirectedCycle,
            _ => return Ok(None),
        };
        self.pos += 1;
        Ok(Some(ctor(self.int()?)))
    }

    fn join_args(&mut self, names: &Scope) -> Result<JoinArgs, ParseError> {
        let left = names.use_name(self)?;
        let (v1, u1) = self.pair()?;
        let right = names.use_name(self)?;
        let (v2, u2) = self.pair()?;
        Ok(JoinArgs {
            left,
            v1,
            u1,
            right,
            v2,
            u2,
        })
    }

    fn at_end(&self) -> Result<(), ParseError> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(self.syntax("end of statement"))
        }
    }
}

struct Scope(HashSet<String>);

impl Scope {
    fn use_name(&self, c: &mut Cursor<'_>) -> Result<String, ParseError> {
        let save = c.pos;
        let name = c.ident("a name")?;
        if self.0.contains(&name) {
            Ok(name)
        } else {
            c.pos = save;
            Err(c.error(ParseErrorKind::UndefinedName))
        }
    }
}

fn parse_expr(c: &mut Cursor<'_>, scope: &Scope) -> Result<Expr, ParseError> {
    let kw = match c.peek() {
        Some(Tok::Ident(s)) => s.clone(),
        _ => return Err(c.syntax("an expression")),
    };
    if let Some(fam) = c.family(&kw)? {
        return Ok(Expr::Axiom(fam));
    }
    c.pos += 1;
    Ok(match kw.as_str() {
        "load" => Expr::Load(c.string()?),
        "hajos" => Expr::Hajos(c.join_args(scope)?),
        "bhajos" => Expr::BHajos(c.join_args(scope)?),
        "dirac" => {
            let a = scope.use_name(c)?;
            let b = scope.use_name(c)?;
            Expr::Dirac(a, b)
        }
        "identify" => {
            let a = scope.use_name(c)?;
            c.sym("{")?;
            Expr::Identify(a, c.list("}", Cursor::vertex)?)
        }
        "orejoin" => {
            let kind = match c.ident("`d` or `b`")?.as_str() {
                "d" => JoinKind::Directed,
                "b" => JoinKind::Bidirected,
                _ => {
                    c.pos -= 1;
                    return Err(c.syntax("`d` or `b`"));
                }
            };
            let j = c.join_args(scope)?;
            if c.ident("`map`")? != "map" {
                c.pos -= 1;
                return Err(c.syntax("`map`"));
            }
            c.sym("{")?;
            let map = c.list("}", |c| {
                let a = c.vertex()?;
                if !c.eat_sym("->") {
                    return Err(c.error(ParseErrorKind::MalformedVertexRef));
                }
                Ok((a, c.vertex()?))
            })?;
            Expr::OreJoin(kind, j, map)
        }
        "relabel" => {
            let a = scope.use_name(c)?;
            c.sym("[")?;
            Expr::Relabel(a, c.list("]", Cursor::vertex)?)
        }
        _ => {
            c.pos -= 1;
            return Err(c.syntax("an expression keyword"));
        }
    })
}

fn parse_claim(c: &mut Cursor<'_>) -> Result<Claim, ParseError> {
    let kw = c.ident("a claim")?;
    Ok(match kw.as_str() {
        "chi" => {
            if c.eat_sym(">=") {
                Claim::ChiAtLeast(c.int()?)
            } else if c.eat_sym("=") {
                Claim::ChiEquals(c.int()?)
            } else {
                return Err(c.syntax("`>=` or `=`"));
            }
        }
        "critical" => Claim::Critical(c.int()?),
        "strong" => Claim::Strong,
        "iso" => match c.peek() {
            Some(Tok::Str(_)) => Claim::IsoFile(c.string()?),
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                match c.family(&s)? {
                    Some(f) => Claim::IsoFamily(f),
                    None => return Err(c.syntax("a path or family")),
                }
            }
            _ => return Err(c.syntax("a path or family")),
        },
        _ => {
            c.pos -= 1;
            return Err(c.syntax("a claim"));
        }
    })
}

pub fn parse_script(text: &str) -> Result<Script, ParseError> {
    let mut script = Script::new();
    let mut scope = Scope(HashSet::new());
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let toks = lex(line, raw)?;
        for stmt in toks.split(|(t, _)| *t == Tok::Sym(";")) {
            if stmt.is_empty() {
                continue;
            }
            let mut c = Cursor {
                line,
                toks: stmt,
                pos: 0,
                end_col: raw.chars().count() + 1,
            };
            match c.ident("`let` or `check`")?.as_str() {
                "let" => {
                    let save = c.pos;
                    let name = c.ident("a name")?;
                    if scope.0.contains(&name) {
                        c.pos = save;
                        return Err(c.error(ParseErrorKind::DuplicateName));
                    }
                    c.sym("=")?;
                    let expr = parse_expr(&mut c, &scope)?;
                    c.at_end()?;
                    scope.0.insert(name.clone());
                    script.steps.push(Step { name, expr });
                    script.step_lines.push(line);
                }
                "check" => {
                    let name = scope.use_name(&mut c)?;
                    let claim = parse_claim(&mut c)?;
                    c.at_end()?;
                    script.checks.push(Check { name, claim });
                    script.check_lines.push(line);
                }
                _ => {
                    c.pos -= 1;
                    return Err(c.syntax("`let` or `check`"));
                }
            }
        }
    }
    if script.steps.is_empty() {
        return Err(ParseError {
            line: last_line.max(1),
            col: 1,
            kind: ParseErrorKind::Syntax("at least one `let` step".into()),
            token: String::new(),
        });
    }
    Ok(script)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axiom_and_join() {
        let s =
            parse_script("let A = bk 4\nlet B = bk 4 # second\nlet C = hajos A (0,1) B (0,1)\n")
                .unwrap();
        assert_eq!(s.steps.len(), 3);
        assert_eq!(s.steps[0].expr, Expr::Axiom(Family::BidirectedComplete(4)));
        assert!(matches!(s.steps[2].expr, Expr::Hajos(_)));
        assert_eq!(s.step_line(2), 3);
    }

    #[test]
    fn undefined_name_reports_position() {
        let e = parse_script("let A = bk 4\nlet C = hajos A (0,1) Z (0,1)").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UndefinedName);
        assert_eq!((e.line, e.col, e.token.as_str()), (2, 23, "Z"));
    }

    #[test]
    fn other_errors() {
        let dup = parse_script("let A = bk 4\nlet A = bk 3").unwrap_err();
        assert_eq!(dup.kind, ParseErrorKind::DuplicateName);
        let mal = parse_script("let A = bk 4\nlet B = hajos A (0;1) A (0,1)").unwrap_err();
        assert_eq!(mal.kind, ParseErrorKind::MalformedVertexRef);
        let mal = parse_script("let A = bk 4\nlet B = identify A {0, x}").unwrap_err();
        assert_eq!(mal.kind, ParseErrorKind::MalformedVertexRef);
        let syn = parse_script("let A = bq 4").unwrap_err();
        assert!(matches!(syn.kind, ParseErrorKind::Syntax(_)));
        assert_eq!(syn.token, "bq");
        assert!(parse_script("# nothing\n").is_err());
        assert!(parse_script("let A = bk 4 extra").is_err());
        assert!(parse_script("check A strong\nlet A = bk 2").is_err());
    }

    #[test]
    fn all_forms_round_trip() {
        let text = "\
let A = bk 3
let B = dc 3
let C = bc 5
let L = load \"x y.dgf\"
let D = hajos A (0,1) A (1,0)
let E = bhajos A (0,1) C (0,1)
let F = dirac A B
let G = identify C {0, 2}
let H = orejoin d A (0,1) A (1,0) map {2->2}
let I = orejoin b A (0,1) A (0,1) map {}
let J = relabel A [2, 0, 1]
check A chi >= 3
check A chi = 3
check D critical 3
check A iso \"k3.dgf\"
check C iso bc 5
check B iso dc 3
check A iso bk 3
check D strong
";
        let s = parse_script(text).unwrap();
        assert_eq!(s.to_string(), text);
        assert_eq!(parse_script(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn semicolons_separate_statements() {
        let s = parse_script(
            "let A = bk 4; let B = bk 4; let C = hajos A (0,1) B (1,0); check C chi = 4",
        )
        .unwrap();
        assert_eq!(s.steps.len(), 3);
        assert_eq!(s.checks.len(), 1);
    }
}
