//! Strategies for random declarations in the input language.
#![allow(dead_code)]

use homex::dsl::*;
use proptest::prelude::*;
use proptest::test_runner::{Config, FileFailurePersistence, RngSeed, TestRunner};

pub fn config(cases: u32) -> Config {
    Config {
        cases,
        failure_persistence: Some(Box::new(FileFailurePersistence::Off)),
        rng_seed: RngSeed::Fixed(0x5eed),
        ..Config::default()
    }
}

pub fn ident() -> impl Strategy<Value = String> {
    "[a-zA-Z_][a-zA-Z0-9_']{0,5}".prop_filter("reserved", |s| !RESERVED.contains(&s.as_str()))
}

pub fn vname() -> impl Strategy<Value = String> {
    prop_oneof![ident(), "[0-9]{1,3}"]
}

pub fn label() -> impl Strategy<Value = String> {
    prop::collection::vec(vname(), 1..3).prop_map(|v| v.join("|"))
}

pub fn scalar() -> impl Strategy<Value = String> {
    ("-?", "[0-9]{1,3}", prop::option::of("[1-9][0-9]{0,2}")).prop_map(|(s, n, d)| match d {
        Some(d) => format!("{s}{n}/{d}"),
        None => format!("{s}{n}"),
    })
}

pub fn matrix() -> impl Strategy<Value = MatrixLit> {
    (0usize..3, 0usize..3).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(scalar(), c), r))
}

pub fn vref() -> impl Strategy<Value = VertexRef> {
    prop_oneof![label().prop_map(VertexRef::Label), (0usize..100).prop_map(VertexRef::Index)]
}

pub fn module_expr() -> impl Strategy<Value = ModuleExpr> {
    let leaf = prop_oneof![
        ident().prop_map(ModuleExpr::Name),
        vref().prop_map(ModuleExpr::Simple),
        vref().prop_map(ModuleExpr::Proj),
        Just(ModuleExpr::Regular),
    ];
    leaf.prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 0..3).prop_map(ModuleExpr::Sum),
            (inner, 0usize..5).prop_map(|(m, n)| ModuleExpr::Syzygy(Box::new(m), n)),
        ]
    })
}

pub fn term() -> impl Strategy<Value = Term> {
    (scalar(), prop::collection::vec(ident(), 1..4)).prop_map(|(coeff, path)| Term { coeff, path })
}

pub fn decl() -> impl Strategy<Value = Decl> {
    let arrow = (ident(), vname(), vname()).prop_map(|(name, source, target)| ArrowDecl { name, source, target });
    let algebra = prop_oneof![
        ident().prop_map(AlgebraExpr::Enveloping),
        ident().prop_map(AlgebraExpr::Opposite),
        ident().prop_map(AlgebraExpr::Big),
        (ident(), ident()).prop_map(|(a, b)| AlgebraExpr::Tensor(a, b)),
        (ident(), ident()).prop_map(|(a, b)| AlgebraExpr::Product(a, b)),
    ];
    let module = prop_oneof![
        module_expr(),
        (0usize..4, prop::collection::vec((label(), matrix()), 0..3))
            .prop_map(|(dim, actions)| ModuleExpr::Matrices { dim, actions }),
    ];
    let side = prop_oneof![Just(Side::Left), Just(Side::Right)];
    let bimodule = prop_oneof![
        ident().prop_map(BimoduleExpr::Name),
        Just(BimoduleExpr::Regular),
        (module_expr(), module_expr()).prop_map(|(x, y)| BimoduleExpr::Outer(x, y)),
        ident().prop_map(BimoduleExpr::Quotient),
        (0usize..4, prop::collection::vec((side, label(), matrix()), 0..3))
            .prop_map(|(dim, actions)| BimoduleExpr::Matrices { dim, actions }),
    ];
    let extension = prop_oneof![
        (ident(), ident(), prop::option::of(matrix())).prop_map(|(small, big, matrix)| ExtensionExpr::Embed {
            small,
            big,
            matrix
        }),
        (ident(), ident()).prop_map(|(algebra, bimodule)| ExtensionExpr::Trivial { algebra, bimodule }),
        (ident(), ident(), matrix()).prop_map(|(algebra, bimodule, product)| ExtensionExpr::Split {
            algebra,
            bimodule,
            product
        }),
        (ident(), ident(), ident()).prop_map(|(lambda, gamma, bimodule)| ExtensionExpr::Triangular {
            lambda,
            gamma,
            bimodule
        }),
        (ident(), ident()).prop_map(|(algebra, arrow)| ExtensionExpr::ArrowRemoval { algebra, arrow }),
    ];
    prop_oneof![
        prop_oneof![Just(FieldSpec::Rationals), any::<u64>().prop_map(FieldSpec::Prime)].prop_map(Decl::Field),
        (ident(), prop::collection::vec(vname(), 0..4), prop::collection::vec(arrow, 0..4))
            .prop_map(|(name, vertices, arrows)| Decl::Quiver { name, vertices, arrows }),
        (ident(), prop::collection::vec(prop::collection::vec(term(), 1..4), 0..3))
            .prop_map(|(name, relations)| Decl::Relations { name, relations }),
        (ident(), algebra).prop_map(|(name, expr)| Decl::Algebra { name, expr }),
        (ident(), ident(), any::<bool>(), module)
            .prop_map(|(name, algebra, right, expr)| Decl::Module { name, algebra, right, expr }),
        (ident(), prop::option::of((ident(), ident())), bimodule)
            .prop_map(|(name, over, expr)| Decl::Bimodule { name, over, expr }),
        (ident(), extension).prop_map(|(name, expr)| Decl::Extension { name, expr }),
    ]
}

pub fn round_trip(decls: Vec<Decl>) -> Result<(), TestCaseError> {
    let f = SourceFile { decls, lines: Vec::new() };
    let text = print(&f);
    let back = parse(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
    prop_assert_eq!(&back, &f);
    prop_assert_eq!(print(&back), text);
    Ok(())
}

pub fn run_round_trip(cases: u32) -> Result<(), String> {
    TestRunner::new(config(cases))
        .run(&prop::collection::vec(decl(), 0..8), round_trip)
        .map_err(|e| e.to_string())
}
