mod common;

use common::*;
use dicrit::constructions::JoinKind;
use dicrit::digraph::io::write_dgf;
use dicrit::digraph::Family;
use dicrit::script::{
    evaluate_script, parse_script, verify_file, verify_script, Claim, Expr, JoinArgs, Mode,
    ParseErrorKind, Script,
};
use dicrit::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![
        (1usize..9).prop_map(Family::BidirectedComplete),
        (2usize..9).prop_map(Family::DirectedCycle),
        (3usize..9).prop_map(Family::BidirectedCycle),
    ]
}

fn join_args(names: usize) -> impl Strategy<Value = JoinArgs> {
    (
        0..names,
        0usize..9,
        0usize..9,
        0..names,
        0usize..9,
        0usize..9,
    )
        .prop_map(|(l, v1, u1, r, v2, u2)| JoinArgs {
            left: format!("N{l}"),
            v1,
            u1,
            right: format!("N{r}"),
            v2,
            u2,
        })
}

/// An expression reading only `N0..N{names-1}`.
fn expr(names: usize) -> BoxedStrategy<Expr> {
    let leaf = prop_oneof![
        family().prop_map(Expr::Axiom),
        "[a-z][a-z0-9_/.]{0,12}".prop_map(Expr::Load),
    ];
    if names == 0 {
        return leaf.boxed();
    }
    let name = (0..names).prop_map(|i| format!("N{i}"));
    prop_oneof![
        leaf,
        join_args(names).prop_map(Expr::Hajos),
        join_args(names).prop_map(Expr::BHajos),
        (name.clone(), name.clone()).prop_map(|(a, b)| Expr::Dirac(a, b)),
        (name.clone(), prop::collection::vec(0usize..20, 1..5))
            .prop_map(|(a, s)| Expr::Identify(a, s)),
        (
            prop_oneof![Just(JoinKind::Directed), Just(JoinKind::Bidirected)],
            join_args(names),
            prop::collection::vec((0usize..9, 0usize..9), 0..4)
        )
            .prop_map(|(k, j, m)| Expr::OreJoin(k, j, m)),
        (name, prop::collection::vec(0usize..9, 0..6)).prop_map(|(a, p)| Expr::Relabel(a, p)),
    ]
    .boxed()
}

fn claim() -> impl Strategy<Value = Claim> {
    prop_oneof![
        (0usize..9).prop_map(Claim::ChiAtLeast),
        (0usize..9).prop_map(Claim::ChiEquals),
        (0usize..9).prop_map(Claim::Critical),
        "[a-z][a-z0-9_.]{0,8}".prop_map(Claim::IsoFile),
        family().prop_map(Claim::IsoFamily),
        Just(Claim::Strong),
    ]
}

fn script() -> impl Strategy<Value = Script> {
    (1usize..7)
        .prop_flat_map(|n| {
            let exprs: Vec<BoxedStrategy<Expr>> = (0..n).map(expr).collect();
            (exprs, prop::collection::vec((0..n, claim()), 0..4))
        })
        .prop_map(|(exprs, checks)| {
            let mut s = Script::new();
            for (i, e) in exprs.into_iter().enumerate() {
                s.push_step(format!("N{i}"), e);
            }
            for (i, c) in checks {
                s.push_check(format!("N{i}"), c);
            }
            s
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn print_then_parse_round_trips(s in script()) {
        let text = s.to_string();
        let back = parse_script(&text).unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(back.to_string(), text);
    }
}

#[test]
fn random_hajos_derivations_are_strong() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..30 {
        let k = 3 + i % 2;
        let s = random_hajos_script(&mut rng, k, 1 + i % 5);
        let env = evaluate_script(&s, None).unwrap();
        for st in &s.steps {
            assert!(env.get(&st.name).unwrap().is_strongly_connected(), "{s}");
        }
        let r = verify_script(&s, None, Mode::Hajos(k));
        assert!(r.accepted(), "{s}\n{r}");
    }
}

#[test]
fn evaluation_is_deterministic() {
    let text =
        "let A = bk 3\nlet B = bc 5\nlet C = hajos A (0,1) B (1,2)\nlet D = identify C {0, 5}\n";
    let a = evaluate_script(&parse_script(text).unwrap(), None).unwrap();
    let b = evaluate_script(&parse_script(text).unwrap(), None).unwrap();
    assert_eq!(
        write_dgf(a.get("D").unwrap()),
        write_dgf(b.get("D").unwrap())
    );
}

#[test]
fn undefined_name_reports_position() {
    let err = parse_script("let A = bk 3\nlet C = hajos A (0,1) Z (0,1)").unwrap_err();
    assert_eq!(err.kind, ParseErrorKind::UndefinedName);
    assert_eq!((err.line, err.token.as_str()), (2, "Z"));
    let err = parse_script("let A = bk 3\nlet A = bk 4").unwrap_err();
    assert_eq!(err.kind, ParseErrorKind::DuplicateName);
}

#[test]
fn files_resolve_relative_to_the_script() {
    let dir = tempfile_dir();
    std::fs::write(
        dir.join("c5.dgf"),
        write_dgf(&Family::BidirectedCycle(5).build().unwrap()),
    )
    .unwrap();
    std::fs::write(
        dir.join("s.hdv"),
        "let A = load \"c5.dgf\"\ncheck A iso bc 5\ncheck A iso \"c5.dgf\"\ncheck A chi = 3\ncheck A critical 3\n",
    )
    .unwrap();
    let r = verify_file(&dir.join("s.hdv"), Mode::Plain).unwrap();
    assert!(r.accepted(), "{r}");
    assert!(matches!(
        verify_file(&dir.join("none.hdv"), Mode::Plain),
        Err(Error::Io { .. })
    ));
    std::fs::remove_dir_all(&dir).unwrap();
}

fn tempfile_dir() -> std::path::PathBuf {
    let d = std::env::temp_dir().join(format!("dicrit-script-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}
