//! Turning parsed declarations into algebras, modules and extensions.

use std::collections::BTreeMap;
use std::sync::Arc;

use homex_core::algebra::{AlgRef, AlgebraTable, Arrow, Presentation, Quiver, Relation};
use homex_core::arith::{Field, Mat};
use homex_core::error::AlgebraError;
use homex_core::extensions::{
    embedding_by_names, make_extension, remove_arrow, split_extension, triangular_algebra, trivial_extension,
    Extension,
};
use homex_core::homology::syzygy;
use homex_core::module::{Bimodule, FdModule};

use crate::dsl::*;

/// What a name refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Algebra,
    Module,
    Bimodule,
    Extension,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::Module => "module",
            Kind::Bimodule => "bimodule",
            Kind::Extension => "extension",
        }
    }
}

/// A module together with the algebra name it was declared over. Right
/// modules are stored as left modules over the opposite algebra.
#[derive(Clone, Debug)]
pub struct NamedModule<K: Field> {
    pub module: FdModule<K>,
    pub over: String,
    pub right: bool,
}

#[derive(Clone, Debug)]
pub struct Workspace<K: Field> {
    pub field: K,
    kinds: BTreeMap<String, Kind>,
    /// Names in declaration order.
    pub order: Vec<String>,
    presentations: BTreeMap<String, Presentation<K>>,
    algebras: BTreeMap<String, AlgRef<K>>,
    opposites: BTreeMap<String, AlgRef<K>>,
    modules: BTreeMap<String, NamedModule<K>>,
    bimodules: BTreeMap<String, Bimodule<K>>,
    extensions: BTreeMap<String, Extension<K>>,
}

/// The field a file asks for, `Q` when it does not say.
pub fn declared_field(file: &SourceFile) -> FieldSpec {
    file.decls
        .iter()
        .find_map(|d| match d {
            Decl::Field(f) => Some(f.clone()),
            _ => None,
        })
        .unwrap_or(FieldSpec::Rationals)
}

type Res<T> = Result<T, ResolveError>;

/// Idempotent actions, then generator actions.
type Actions<K> = (Vec<Mat<K>>, Vec<Mat<K>>);

fn fail<T>(line: usize, message: impl Into<String>) -> Res<T> {
    Err(ResolveError { line, message: message.into() })
}

impl<K: Field> Workspace<K> {
    /// Resolves every declaration of `file` over `field`.
    pub fn build(field: K, file: &SourceFile) -> Res<Self> {
        let mut ws = Workspace {
            field,
            kinds: BTreeMap::new(),
            order: Vec::new(),
            presentations: BTreeMap::new(),
            algebras: BTreeMap::new(),
            opposites: BTreeMap::new(),
            modules: BTreeMap::new(),
            bimodules: BTreeMap::new(),
            extensions: BTreeMap::new(),
        };
        let line = |i: usize| file.lines.get(i).copied().unwrap_or(0);
        let mut fields = 0;
        for (i, d) in file.decls.iter().enumerate() {
            if let Decl::Field(_) = d {
                fields += 1;
                if fields > 1 || i > 0 {
                    return fail(line(i), "the field must be declared once, on the first line");
                }
            }
        }
        // quivers and their relations first, so relations may follow later
        let mut relations: BTreeMap<&str, Vec<(usize, &Vec<Term>)>> = BTreeMap::new();
        for (i, d) in file.decls.iter().enumerate() {
            if let Decl::Relations { name, relations: rs } = d {
                relations.entry(name.as_str()).or_default().extend(rs.iter().map(|r| (line(i), r)));
            }
        }
        for (i, d) in file.decls.iter().enumerate() {
            if let Decl::Quiver { name, vertices, arrows } = d {
                ws.claim(name, Kind::Algebra, line(i))?;
                let rels = relations.remove(name.as_str()).unwrap_or_default();
                let p = ws.presentation(name, vertices, arrows, &rels, line(i))?;
                let a = p.algebra().or_else(|e| fail(line(i), format!("quiver {name}: {e}")))?;
                ws.presentations.insert(name.clone(), p);
                ws.algebras.insert(name.clone(), Arc::new(a));
            }
        }
        if let Some((name, rs)) = relations.into_iter().next() {
            return fail(rs[0].0, format!("relations for unknown quiver '{name}'"));
        }
        for (i, d) in file.decls.iter().enumerate() {
            let l = line(i);
            match d {
                Decl::Field(_) | Decl::Quiver { .. } | Decl::Relations { .. } => {}
                Decl::Algebra { name, expr } => {
                    ws.claim(name, Kind::Algebra, l)?;
                    let a = ws.algebra_expr(expr, l)?;
                    ws.algebras.insert(name.clone(), a);
                }
                Decl::Module { name, algebra, right, expr } => {
                    ws.claim(name, Kind::Module, l)?;
                    let target = if *right { ws.opposite(algebra, l)? } else { ws.algebra_ref(algebra, l)? };
                    let module = ws.module_expr(expr, &target, l)?;
                    ws.modules.insert(name.clone(), NamedModule { module, over: algebra.clone(), right: *right });
                }
                Decl::Bimodule { name, over, expr } => {
                    ws.claim(name, Kind::Bimodule, l)?;
                    let b = ws.bimodule_decl(name, over.as_ref(), expr, l)?;
                    ws.bimodules.insert(name.clone(), b);
                }
                Decl::Extension { name, expr } => {
                    ws.claim(name, Kind::Extension, l)?;
                    let e = ws.extension_expr(expr, l)?;
                    ws.extensions.insert(name.clone(), e);
                }
            }
        }
        Ok(ws)
    }

    fn claim(&mut self, name: &str, kind: Kind, line: usize) -> Res<()> {
        if let Some(k) = self.kinds.get(name) {
            return fail(line, format!("'{name}' is already declared (as {} {})", article(k.as_str()), k.as_str()));
        }
        self.kinds.insert(name.to_string(), kind);
        self.order.push(name.to_string());
        Ok(())
    }

    fn presentation(
        &self,
        name: &str,
        vertices: &[String],
        arrows: &[ArrowDecl],
        rels: &[(usize, &Vec<Term>)],
        line: usize,
    ) -> Res<Presentation<K>> {
        let mut quiver = Quiver { vertices: vertices.to_vec(), arrows: Vec::new() };
        for a in arrows {
            let end = |v: &str| match quiver.vertex(v) {
                Some(i) => Ok(i),
                None => fail(line, format!("arrow {} in quiver {name} uses unknown vertex '{v}'", a.name)),
            };
            let (source, target) = (end(&a.source)?, end(&a.target)?);
            quiver.arrows.push(Arrow { name: a.name.clone(), source, target });
        }
        let mut relations = Vec::new();
        for (k, (l, terms)) in rels.iter().enumerate() {
            let text = lincomb(terms);
            let mut r = Relation { terms: Vec::new() };
            for t in terms.iter() {
                let Some(c) = self.field.parse_elem(&t.coeff) else {
                    return fail(*l, format!("relation {} of {name} ({text}): bad coefficient '{}'", k + 1, t.coeff));
                };
                let mut path = Vec::new();
                for a in t.path.iter().rev() {
                    match quiver.arrow(a) {
                        Some(i) => path.push(i),
                        None => {
                            return fail(*l, format!("relation {} of {name} ({text}): unknown arrow '{a}'", k + 1));
                        }
                    }
                }
                r.terms.push((c, path));
            }
            relations.push(r);
        }
        Presentation::new(self.field.clone(), quiver, relations).map_err(|e| match e {
            AlgebraError::BadRelation { index, reason } => {
                let (l, terms) = rels[index];
                ResolveError { line: l, message: format!("relation {} of {name} ({}): {reason}", index + 1, lincomb(terms)) }
            }
            e => ResolveError { line, message: format!("quiver {name}: {e}") },
        })
    }

    fn expect_kind(&self, name: &str, kind: Kind, line: usize) -> Res<()> {
        match self.kinds.get(name) {
            Some(k) if *k == kind => Ok(()),
            Some(k) => fail(line, format!("'{name}' is {} {}, not {} {}", article(k.as_str()), k.as_str(), article(kind.as_str()), kind.as_str())),
            None => fail(line, format!("unknown {} '{name}'", kind.as_str())),
        }
    }

    fn algebra_ref(&self, name: &str, line: usize) -> Res<AlgRef<K>> {
        self.expect_kind(name, Kind::Algebra, line)?;
        match self.algebras.get(name) {
            Some(a) => Ok(a.clone()),
            None => fail(line, format!("algebra '{name}' is used before it is declared")),
        }
    }

    fn opposite(&mut self, name: &str, line: usize) -> Res<AlgRef<K>> {
        let a = self.algebra_ref(name, line)?;
        Ok(self.opposites.entry(name.to_string()).or_insert_with(|| Arc::new(a.opposite())).clone())
    }

    fn extension_ref(&self, name: &str, line: usize) -> Res<&Extension<K>> {
        self.expect_kind(name, Kind::Extension, line)?;
        match self.extensions.get(name) {
            Some(e) => Ok(e),
            None => fail(line, format!("extension '{name}' is used before it is declared")),
        }
    }

    fn algebra_expr(&mut self, expr: &AlgebraExpr, line: usize) -> Res<AlgRef<K>> {
        let err = |e: AlgebraError| ResolveError { line, message: e.to_string() };
        Ok(match expr {
            AlgebraExpr::Enveloping(a) => Arc::new(self.algebra_ref(a, line)?.enveloping().map_err(err)?),
            AlgebraExpr::Opposite(a) => self.opposite(a, line)?,
            AlgebraExpr::Tensor(a, b) => {
                let (a, b) = (self.algebra_ref(a, line)?, self.algebra_ref(b, line)?);
                Arc::new(a.tensor(&b).map_err(err)?)
            }
            AlgebraExpr::Product(a, b) => {
                let (a, b) = (self.algebra_ref(a, line)?, self.algebra_ref(b, line)?);
                Arc::new(a.product(&b))
            }
            AlgebraExpr::Big(e) => self.extension_ref(e, line)?.big().clone(),
        })
    }

    fn vertex(&self, a: &AlgebraTable<K>, v: &VertexRef, line: usize) -> Res<usize> {
        match v {
            VertexRef::Index(k) if *k < a.num_vertices() => Ok(*k),
            VertexRef::Index(k) => fail(line, format!("vertex #{k} out of range (the algebra has {})", a.num_vertices())),
            VertexRef::Label(l) => match a.vertex_labels().iter().position(|x| x == l) {
                Some(i) => Ok(i),
                None => fail(line, format!("unknown vertex '{l}'")),
            },
        }
    }

    fn matrix(&self, m: &MatrixLit, rows: usize, cols: usize, what: &str, line: usize) -> Res<Mat<K>> {
        if m.len() != rows || m.iter().any(|r| r.len() != cols) {
            return fail(line, format!("{what}: expected a {rows}x{cols} matrix"));
        }
        let mut out = Vec::with_capacity(rows);
        for r in m {
            let mut row = Vec::with_capacity(cols);
            for x in r {
                match self.field.parse_elem(x) {
                    Some(c) => row.push(c),
                    None => return fail(line, format!("{what}: '{x}' is not an element of {}", self.field.name())),
                }
            }
            out.push(row);
        }
        Ok(Mat::from_rows(&self.field, cols, out))
    }

    /// Idempotent and generator matrices from `key = matrix` entries.
    fn actions<'a>(
        &self,
        a: &AlgebraTable<K>,
        dim: usize,
        entries: impl Iterator<Item = (&'a String, &'a MatrixLit)>,
        line: usize,
    ) -> Res<Actions<K>> {
        let mut idem: Vec<Option<Mat<K>>> = vec![None; a.num_vertices()];
        let mut gens: Vec<Option<Mat<K>>> = vec![None; a.generators().len()];
        for (key, m) in entries {
            let slot = if let Some(i) = a.vertex_labels().iter().position(|x| x == key) {
                &mut idem[i]
            } else if let Some(g) = a.generators().iter().position(|g| &g.label == key) {
                &mut gens[g]
            } else {
                return fail(line, format!("'{key}' is neither a vertex nor an arrow of the algebra"));
            };
            if slot.is_some() {
                return fail(line, format!("action of '{key}' given twice"));
            }
            *slot = Some(self.matrix(m, dim, dim, &format!("action of '{key}'"), line)?);
        }
        let single = a.num_vertices() == 1;
        let idem = idem
            .into_iter()
            .enumerate()
            .map(|(i, m)| match m {
                Some(m) => Ok(m),
                None if single => Ok(Mat::identity(&self.field, dim)),
                None => fail(line, format!("no action given for vertex '{}'", a.vertex_labels()[i])),
            })
            .collect::<Res<Vec<_>>>()?;
        let gens = gens.into_iter().map(|m| m.unwrap_or_else(|| Mat::zeros(&self.field, dim, dim))).collect();
        Ok((idem, gens))
    }

    fn module_expr(&self, expr: &ModuleExpr, target: &AlgRef<K>, line: usize) -> Res<FdModule<K>> {
        let merr = |e: homex_core::error::ModuleError| ResolveError { line, message: e.to_string() };
        Ok(match expr {
            ModuleExpr::Name(n) => {
                self.expect_kind(n, Kind::Module, line)?;
                let Some(m) = self.modules.get(n) else {
                    return fail(line, format!("module '{n}' is used before it is declared"));
                };
                if !m.module.algebra().same_as(target) {
                    return fail(line, format!("module '{n}' is over a different algebra"));
                }
                m.module.rebase(target.clone()).map_err(merr)?
            }
            ModuleExpr::Simple(v) => FdModule::simple(target.clone(), self.vertex(target, v, line)?).map_err(merr)?,
            ModuleExpr::Proj(v) => FdModule::projective(target.clone(), self.vertex(target, v, line)?).map_err(merr)?,
            ModuleExpr::Regular => FdModule::regular(target.clone()),
            ModuleExpr::Sum(parts) => {
                let ms = parts.iter().map(|p| self.module_expr(p, target, line)).collect::<Res<Vec<_>>>()?;
                FdModule::direct_sum(target.clone(), &ms)
            }
            ModuleExpr::Syzygy(m, n) => syzygy(&self.module_expr(m, target, line)?, *n),
            ModuleExpr::Matrices { dim, actions } => {
                let (idem, gens) = self.actions(target, *dim, actions.iter().map(|(k, m)| (k, m)), line)?;
                FdModule::new(target.clone(), *dim, idem, gens).map_err(merr)?
            }
        })
    }

    fn bimodule_decl(
        &mut self,
        name: &str,
        over: Option<&(String, String)>,
        expr: &BimoduleExpr,
        line: usize,
    ) -> Res<Bimodule<K>> {
        let merr = |e: homex_core::error::ModuleError| ResolveError { line, message: e.to_string() };
        let algebras = match over {
            Some((l, r)) => Some((self.algebra_ref(l, line)?, self.algebra_ref(r, line)?, r.clone())),
            None => None,
        };
        let need = || match &algebras {
            Some(x) => Ok(x.clone()),
            None => fail(line, format!("bimodule {name} needs 'over LEFT, RIGHT'")),
        };
        let b = match expr {
            BimoduleExpr::Name(n) => {
                self.expect_kind(n, Kind::Bimodule, line)?;
                match self.bimodules.get(n) {
                    Some(b) => b.clone(),
                    None => return fail(line, format!("bimodule '{n}' is used before it is declared")),
                }
            }
            BimoduleExpr::Quotient(e) => self.extension_ref(e, line)?.quotient_bimodule().module,
            BimoduleExpr::Regular => {
                let (l, r, _) = need()?;
                if !l.same_as(&r) {
                    return fail(line, "the regular bimodule needs the same algebra on both sides");
                }
                Bimodule::regular(l)
            }
            BimoduleExpr::Outer(x, y) => {
                let (l, r, rname) = need()?;
                let op = self.opposite(&rname, line)?;
                let x = self.module_expr(x, &l, line)?;
                let y = self.module_expr(y, &op, line)?;
                Bimodule::outer(&x, &y, r).map_err(merr)?
            }
            BimoduleExpr::Matrices { dim, actions } => {
                let (l, r, _) = need()?;
                let side = |s: Side| actions.iter().filter(move |a| a.0 == s).map(|a| (&a.1, &a.2));
                let (li, lg) = self.actions(&l, *dim, side(Side::Left), line)?;
                let (ri, rg) = self.actions(&r, *dim, side(Side::Right), line)?;
                Bimodule::new(l, r, *dim, li, lg, ri, rg).map_err(merr)?
            }
        };
        match algebras {
            Some((l, r, _)) => b.rebase(l, r).or_else(|_| fail(line, format!("bimodule {name} is not over the stated algebras"))),
            None => Ok(b),
        }
    }

    fn extension_expr(&mut self, expr: &ExtensionExpr, line: usize) -> Res<Extension<K>> {
        let eerr = |e: homex_core::error::ExtensionError| ResolveError { line, message: e.to_string() };
        match expr {
            ExtensionExpr::Embed { small, big, matrix } => {
                let (b, a) = (self.algebra_ref(small, line)?, self.algebra_ref(big, line)?);
                let emb = match matrix {
                    Some(m) => self.matrix(m, a.dim(), b.dim(), "embedding", line)?,
                    None => match embedding_by_names(&b, &a) {
                        Some(m) => m,
                        None => {
                            return fail(line, format!("cannot embed {small} in {big} by matching vertex and arrow names"))
                        }
                    },
                };
                make_extension(b, a, emb, None).map_err(eerr)
            }
            ExtensionExpr::Trivial { algebra, bimodule } => {
                let b = self.algebra_ref(algebra, line)?;
                let m = self.bimodule_ref(bimodule, line)?;
                let m = m.rebase(b.clone(), b.clone()).or_else(|_| fail(line, format!("{bimodule} is not a {algebra}-{algebra} bimodule")))?;
                trivial_extension(b, &m).map_err(eerr)
            }
            ExtensionExpr::Split { algebra, bimodule, product } => {
                let b = self.algebra_ref(algebra, line)?;
                let m = self.bimodule_ref(bimodule, line)?;
                let m = m.rebase(b.clone(), b.clone()).or_else(|_| fail(line, format!("{bimodule} is not a {algebra}-{algebra} bimodule")))?;
                let d = m.dim();
                let p = self.matrix(product, d, d * d, "product", line)?;
                split_extension(b, &m, &p).map_err(eerr)
            }
            ExtensionExpr::Triangular { lambda, gamma, bimodule } => {
                let (l, g) = (self.algebra_ref(lambda, line)?, self.algebra_ref(gamma, line)?);
                let w = self.bimodule_ref(bimodule, line)?;
                Ok(triangular_algebra(l, g, &w).map_err(eerr)?.extension)
            }
            ExtensionExpr::ArrowRemoval { algebra, arrow } => {
                self.expect_kind(algebra, Kind::Algebra, line)?;
                let Some(p) = self.presentations.get(algebra) else {
                    return fail(line, format!("arrow_removal needs a quiver algebra, and '{algebra}' is not one"));
                };
                remove_arrow(p, arrow).map_err(eerr)
            }
        }
    }

    fn bimodule_ref(&self, name: &str, line: usize) -> Res<Bimodule<K>> {
        self.expect_kind(name, Kind::Bimodule, line)?;
        match self.bimodules.get(name) {
            Some(b) => Ok(b.clone()),
            None => fail(line, format!("bimodule '{name}' is used before it is declared")),
        }
    }

    /// Evaluates a bimodule expression outside the file, as for
    /// certificates; `line` is 0.
    pub fn eval_bimodule(&mut self, label: &str, over: &(String, String), expr: &BimoduleExpr) -> Res<Bimodule<K>> {
        self.bimodule_decl(label, Some(over), expr, 0)
    }

    pub fn kind(&self, name: &str) -> Option<Kind> {
        self.kinds.get(name).copied()
    }

    pub fn algebra(&self, name: &str) -> Option<&AlgRef<K>> {
        self.algebras.get(name)
    }

    pub fn presentation_of(&self, name: &str) -> Option<&Presentation<K>> {
        self.presentations.get(name)
    }

    pub fn module(&self, name: &str) -> Option<&NamedModule<K>> {
        self.modules.get(name)
    }

    pub fn bimodule(&self, name: &str) -> Option<&Bimodule<K>> {
        self.bimodules.get(name)
    }

    pub fn extension(&self, name: &str) -> Option<&Extension<K>> {
        self.extensions.get(name)
    }

    /// Names of one kind, in declaration order.
    pub fn names(&self, kind: Kind) -> Vec<&str> {
        self.order.iter().filter(|n| self.kinds[n.as_str()] == kind).map(String::as_str).collect()
    }

    /// The opposite of a declared algebra, shared between calls.
    pub fn opposite_of(&self, name: &str) -> Option<AlgRef<K>> {
        match self.opposites.get(name) {
            Some(o) => Some(o.clone()),
            None => self.algebras.get(name).map(|a| Arc::new(a.opposite())),
        }
    }
}

fn article(word: &str) -> &'static str {
    if word.starts_with(['a', 'e', 'i', 'o', 'u']) {
        "an"
    } else {
        "a"
    }
}
