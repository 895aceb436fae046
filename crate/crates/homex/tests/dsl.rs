mod common;

use std::path::PathBuf;

use common::*;
use homex::dsl::*;
use homex::workspace::{Kind, Workspace};
use homex_core::arith::Rationals;
use proptest::prelude::*;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn corpus() -> Vec<(String, String)> {
    let mut out = Vec::new();
    for entry in std::fs::read_dir(data("")).unwrap() {
        let p = entry.unwrap().path();
        if p.extension().is_some_and(|e| e == "hx") {
            out.push((p.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read_to_string(&p).unwrap()));
        }
    }
    out.sort();
    out
}

#[test]
fn corpus_round_trips_and_resolves() {
    let files = corpus();
    assert!(files.len() >= 5);
    for (name, text) in files {
        let f = parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let printed = print(&f);
        assert_eq!(parse(&printed).unwrap(), f, "{name}");
        assert_eq!(print(&parse(&printed).unwrap()), printed, "{name}");
        Workspace::build(Rationals, &f).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn example64_dimensions() {
    let text = std::fs::read_to_string(data("example64.hx")).unwrap();
    assert_eq!(text.lines().count(), 9);
    let ws = Workspace::build(Rationals, &parse(&text).unwrap()).unwrap();
    assert_eq!(ws.algebra("Lambda").unwrap().dim(), 9);
    assert_eq!(ws.algebra("Gamma").unwrap().dim(), 5);
    assert_eq!(ws.extension("E").unwrap().quotient_dim(), 4);
    assert_eq!(ws.bimodule("LaL_over_Ge").unwrap().dim(), 4);
    assert_eq!(ws.names(Kind::Algebra), ["Lambda", "Gamma"]);
}

#[test]
fn inhomogeneous_relation_is_named() {
    let src = "field Q\nquiver L { vertices 1 2; arrow a: 1 -> 2; arrow b: 2 -> 2 }\nrelations L {\n  b*b\n  b*a - a\n}\n";
    let e = Workspace::build(Rationals, &parse(src).unwrap()).unwrap_err();
    assert_eq!(e.line, 3);
    assert!(e.message.contains("relation 2 of L (b*a - a)"), "{}", e.message);
    assert!(e.message.contains("not homogeneous"), "{}", e.message);
}

#[test]
fn parse_errors_carry_positions_and_expectations() {
    let cases: &[(&str, (usize, usize), &str)] = &[
        ("field Q\nquiver L {\n  arow a: 1 -> 2\n}", (3, 3), "'arrow'"),
        ("field R", (1, 7), "'Q'"),
        ("algebra X = enveloping(A", (1, 25), "')'"),
        ("module M over A = simple(1) extra", (1, 29), "end of line"),
        ("quiver L { arrow a: 1 2 }", (1, 23), "'->'"),
        ("relations L { 2*  }", (1, 19), "identifier"),
        ("module M over A { dim 1; 1 = [[1, ]] }", (1, 35), "number"),
        ("bogus", (1, 1), "'quiver'"),
    ];
    for (src, (line, col), want) in cases {
        let e = parse(src).unwrap_err();
        assert_eq!((e.pos.line, e.pos.col), (*line, *col), "{src}: {e}");
        assert!(e.expected.iter().any(|x| x == want), "{src}: {e}");
    }
    let e = parse("module sum over A = regular").unwrap_err();
    assert!(e.message.contains("reserved"));
    let e = parse("module M over A {\n  1 = [[1]]\n}").unwrap_err();
    assert!(e.message.contains("dim"));
}

#[test]
fn resolution_errors() {
    let bad = [
        ("module S over X = simple(1)", "unknown algebra 'X'"),
        ("quiver L { vertices 1 }\nmodule S over L = simple(2)", "unknown vertex '2'"),
        ("quiver L { vertices 1 }\nmodule S over L = simple(#3)", "out of range"),
        ("quiver L { vertices 1 }\nquiver L { vertices 1 }", "already declared"),
        ("quiver L { vertices 1; arrow a: 1 -> 2 }", "unknown vertex '2'"),
        ("relations L { a*a }", "unknown quiver 'L'"),
        ("quiver L { vertices 1 }\nfield Q", "field"),
        ("quiver L { vertices 1 }\nextension E = arrow_removal(L, z)", "unknown name 'z'"),
        ("quiver L { vertices 1 }\nbimodule W = regular", "needs 'over"),
        ("quiver L { vertices 1 }\nmodule M over L { dim 1; x = [[1]] }", "neither a vertex nor an arrow"),
        ("quiver L { vertices 1 }\nmodule M over L { dim 2; 1 = [[1]] }", "2x2"),
        ("quiver L { vertices 1 2 }\nmodule M over L { dim 1; 1 = [[1]] }", "no action given for vertex '2'"),
        ("quiver L { vertices 1 }\nmodule M over L { dim 1; 1 = [[1/0]] }", "not an element"),
        ("quiver L { vertices 1; arrow x: 1 -> 1 }\nrelations L { x*x }\nextension E = arrow_removal(L, x)", "occurs in a relation"),
        ("quiver L { vertices 1 }\nmodule M over L = regular\nalgebra B = big(M)", "not an extension"),
    ];
    for (src, want) in bad {
        let f = parse(src).unwrap_or_else(|e| panic!("{src}: {e}"));
        let e = Workspace::build(Rationals, &f).unwrap_err();
        assert!(e.message.contains(want), "{src}: {e}");
    }
}

#[test]
fn modules_and_bimodules_by_matrices() {
    let src = "\
field Q
quiver K { vertices 1; arrow x: 1 -> 1 }
relations K { x*x }
module M over K {
  dim 2
  x = [[0, 0],
       [1, 0]]
}
rmodule T over K = simple(#0)
module Both over K = sum(M, simple(1), syzygy(simple(1), 3))
bimodule W over K, K {
  dim 2
  left x = [[0, 0], [1, 0]]
  right x = [[0, 0], [1, 0]]
}
bimodule V over K, K = outer(simple(1), T)
extension E = split(K, V, [[0]])
";
    let ws = Workspace::build(Rationals, &parse(src).unwrap()).unwrap();
    assert_eq!(ws.module("Both").unwrap().module.dim(), 4);
    assert!(ws.module("T").unwrap().right);
    assert_eq!(ws.bimodule("W").unwrap().dim(), 2);
    assert_eq!(ws.extension("E").unwrap().big().dim(), 3);
    let bad = src.replace("left x = [[0, 0], [1, 0]]", "left x = [[0, 1], [1, 0]]");
    assert!(Workspace::build(Rationals, &parse(&bad).unwrap()).is_err());
}

#[test]
fn comments_separators_and_signs() {
    let a = parse("# header\nfield F 7 # trailing\n\nquiver L { vertices 1 2 ; arrow a : 1->2 }\n;;\n").unwrap();
    let b = parse("field F 7; quiver L {\n vertices 1 2\n arrow a: 1 -> 2\n}").unwrap();
    assert_eq!(a, b);
    let f = parse("relations L { -b*a + 2 d*c - 1/2*e*f }").unwrap();
    let Decl::Relations { relations, .. } = &f.decls[0] else { panic!() };
    assert_eq!(lincomb(&relations[0]), "-b*a + 2 d*c - 1/2 e*f");
}

// round trip

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn parse_print_round_trip(decls in prop::collection::vec(decl(), 0..8)) {
        round_trip(decls)?;
    }

    #[test]
    fn parser_never_panics_on_bytes(bytes in prop::collection::vec(any::<u8>(), 0..200)) {
        let text = String::from_utf8_lossy(&bytes);
        let _ = parse(&text);
    }

    #[test]
    fn parser_never_panics_on_token_soup(words in prop::collection::vec(prop_oneof![
        Just("field"), Just("quiver"), Just("relations"), Just("module"), Just("bimodule"), Just("extension"),
        Just("algebra"), Just("rmodule"), Just("over"), Just("simple"), Just("sum"), Just("syzygy"), Just("dim"),
        Just("left"), Just("embed"), Just("split"), Just("{"), Just("}"), Just("("), Just(")"), Just("["),
        Just("]"), Just(","), Just(";"), Just("\n"), Just("="), Just("->"), Just("*"), Just("-"), Just("+"),
        Just("/"), Just("|"), Just("#"), Just("#1"), Just(":"), Just("1"), Just("99999999999999999999999"),
        Just("a"), Just("Q"), Just("F"),
    ], 0..60)) {
        let text = words.join(" ");
        if let Ok(f) = parse(&text) {
            prop_assert_eq!(parse(&print(&f)).ok(), Some(f));
        }
    }
}

#[test]
fn deeply_nested_input_is_rejected() {
    let mut s = String::from("module M over A = ");
    for _ in 0..10_000 {
        s.push_str("sum(");
    }
    assert!(parse(&s).is_err());
}
