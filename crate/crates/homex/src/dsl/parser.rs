use super::ast::*;
use super::error::{ParseError, Pos};
use super::lexer::{lex, Tok, Token};

const DECL_KEYWORDS: &[&str] = &["field", "quiver", "relations", "algebra", "module", "rmodule", "bimodule", "extension"];

/// Words that cannot name a declaration because they start expressions.
pub const RESERVED: &[&str] = &[
    "field", "quiver", "relations", "algebra", "module", "rmodule", "bimodule", "extension", "over", "simple",
    "proj", "regular", "sum", "syzygy", "outer", "quotient", "enveloping", "opposite", "tensor", "product", "big",
    "embed", "trivial", "split", "triangular", "arrow_removal", "dim", "left", "right", "vertices", "arrow",
];

/// Parses a whole source file.
pub fn parse(src: &str) -> Result<SourceFile, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, i: 0, depth: 0 };
    p.file()
}

struct Parser {
    toks: Vec<Token>,
    i: usize,
    depth: usize,
}

const MAX_DEPTH: usize = 64;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].tok
    }


    fn pos(&self) -> Pos {
        self.toks[self.i].pos
    }

    fn advance(&mut self) -> Token {
        let t = self.toks[self.i].clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn error<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        let found = self.peek().describe();
        Err(ParseError::new(self.pos(), format!("unexpected {found}"), expected.iter().map(|s| s.to_string()).collect()))
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.advance();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok) -> Result<(), ParseError> {
        if self.eat(&t) {
            Ok(())
        } else {
            self.error(&[&format!("'{}'", t.symbol())])
        }
    }

    fn skip_nl(&mut self) {
        while matches!(self.peek(), Tok::Newline) {
            self.advance();
        }
    }

    fn skip_seps(&mut self) {
        while matches!(self.peek(), Tok::Newline | Tok::Semi) {
            self.advance();
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.advance();
                Ok(s)
            }
            _ => self.error(&["identifier"]),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.advance();
                Ok(())
            }
            _ => self.error(&[&format!("'{kw}'")]),
        }
    }

    fn is_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    /// A name introduced by a declaration.
    fn new_name(&mut self) -> Result<String, ParseError> {
        let pos = self.pos();
        let s = self.ident()?;
        if RESERVED.contains(&s.as_str()) {
            return Err(ParseError::new(pos, format!("'{s}' is reserved and cannot be used as a name"), Vec::new()));
        }
        Ok(s)
    }

    /// A vertex name, `1` or `a`.
    fn vname(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) | Tok::Int(s) => {
                self.advance();
                Ok(s)
            }
            _ => self.error(&["vertex name"]),
        }
    }

    /// A label possibly joined with `|`, as in `1|2`.
    fn label(&mut self) -> Result<String, ParseError> {
        let mut s = self.vname()?;
        while self.eat(&Tok::Pipe) {
            s.push('|');
            s.push_str(&self.vname()?);
        }
        Ok(s)
    }

    fn vref(&mut self) -> Result<VertexRef, ParseError> {
        if self.eat(&Tok::Hash) {
            let pos = self.pos();
            let n = self.int()?;
            return n.parse().map(VertexRef::Index).map_err(|_| ParseError::new(pos, "vertex index too large", Vec::new()));
        }
        Ok(VertexRef::Label(self.label()?))
    }

    fn int(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Int(s) => {
                self.advance();
                Ok(s)
            }
            _ => self.error(&["number"]),
        }
    }

    fn usize_lit(&mut self) -> Result<usize, ParseError> {
        let pos = self.pos();
        let s = self.int()?;
        s.parse().map_err(|_| ParseError::new(pos, format!("number '{s}' is too large"), Vec::new()))
    }

    /// `3` or `3/4`, unsigned.
    fn scalar(&mut self) -> Result<String, ParseError> {
        let mut s = self.int()?;
        if self.eat(&Tok::Slash) {
            s.push('/');
            s.push_str(&self.int()?);
        }
        Ok(s)
    }

    fn signed_scalar(&mut self) -> Result<String, ParseError> {
        if self.eat(&Tok::Minus) {
            Ok(format!("-{}", self.scalar()?))
        } else {
            self.scalar()
        }
    }

    fn file(&mut self) -> Result<SourceFile, ParseError> {
        let mut file = SourceFile::default();
        self.skip_seps();
        while !matches!(self.peek(), Tok::Eof) {
            let line = self.pos().line;
            let d = self.decl()?;
            file.decls.push(d);
            file.lines.push(line);
            match self.peek() {
                Tok::Newline | Tok::Semi => self.skip_seps(),
                Tok::Eof => {}
                _ => return self.error(&["end of line", "';'"]),
            }
        }
        Ok(file)
    }

    fn decl(&mut self) -> Result<Decl, ParseError> {
        let kw = match self.peek() {
            Tok::Ident(s) if DECL_KEYWORDS.contains(&s.as_str()) => s.clone(),
            _ => {
                let quoted: Vec<String> = DECL_KEYWORDS.iter().map(|k| format!("'{k}'")).collect();
                let refs: Vec<&str> = quoted.iter().map(String::as_str).collect();
                return self.error(&refs);
            }
        };
        self.advance();
        match kw.as_str() {
            "field" => self.field_decl(),
            "quiver" => self.quiver_decl(),
            "relations" => self.relations_decl(),
            "algebra" => {
                let name = self.new_name()?;
                self.expect(Tok::Eq)?;
                Ok(Decl::Algebra { name, expr: self.algebra_expr()? })
            }
            "module" | "rmodule" => {
                let name = self.new_name()?;
                self.keyword("over")?;
                let algebra = self.ident()?;
                let expr = if self.eat(&Tok::Eq) {
                    self.module_expr()?
                } else if matches!(self.peek(), Tok::LBrace) {
                    self.module_body()?
                } else {
                    return self.error(&["'='", "'{'"]);
                };
                Ok(Decl::Module { name, algebra, right: kw == "rmodule", expr })
            }
            "bimodule" => {
                let name = self.new_name()?;
                let over = if self.is_keyword("over") {
                    self.advance();
                    let l = self.ident()?;
                    self.expect(Tok::Comma)?;
                    let r = self.ident()?;
                    Some((l, r))
                } else {
                    None
                };
                let expr = if self.eat(&Tok::Eq) {
                    self.bimodule_expr()?
                } else if matches!(self.peek(), Tok::LBrace) {
                    self.bimodule_body()?
                } else {
                    return self.error(&["'='", "'{'", "'over'"]);
                };
                Ok(Decl::Bimodule { name, over, expr })
            }
            _ => {
                let name = self.new_name()?;
                self.expect(Tok::Eq)?;
                Ok(Decl::Extension { name, expr: self.extension_expr()? })
            }
        }
    }

    fn field_decl(&mut self) -> Result<Decl, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) if s == "Q" => {
                self.advance();
                Ok(Decl::Field(FieldSpec::Rationals))
            }
            Tok::Ident(s) if s == "F" => {
                self.advance();
                let pos = self.pos();
                let n = self.int()?;
                let q = n.parse().map_err(|_| ParseError::new(pos, "characteristic too large", Vec::new()))?;
                Ok(Decl::Field(FieldSpec::Prime(q)))
            }
            _ => self.error(&["'Q'", "'F'"]),
        }
    }

    /// `{ item (sep item)* }` with separators `;` or newlines.
    fn block<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T, ParseError>) -> Result<Vec<T>, ParseError> {
        self.expect(Tok::LBrace)?;
        let mut out = Vec::new();
        self.skip_seps();
        while !matches!(self.peek(), Tok::RBrace) {
            out.push(item(self)?);
            match self.peek() {
                Tok::Newline | Tok::Semi => self.skip_seps(),
                Tok::RBrace => {}
                _ => return self.error(&["end of line", "';'", "'}'"]),
            }
        }
        self.advance();
        Ok(out)
    }

    fn quiver_decl(&mut self) -> Result<Decl, ParseError> {
        let name = self.new_name()?;
        let mut vertices = Vec::new();
        let mut arrows = Vec::new();
        self.block(|p| {
            if p.is_keyword("vertices") {
                p.advance();
                while matches!(p.peek(), Tok::Ident(_) | Tok::Int(_)) {
                    vertices.push(p.vname()?);
                }
                Ok(())
            } else if p.is_keyword("arrow") {
                p.advance();
                let name = p.ident()?;
                p.expect(Tok::Colon)?;
                let source = p.vname()?;
                p.expect(Tok::Arrow)?;
                let target = p.vname()?;
                arrows.push(ArrowDecl { name, source, target });
                Ok(())
            } else {
                p.error(&["'vertices'", "'arrow'", "'}'"])
            }
        })?;
        Ok(Decl::Quiver { name, vertices, arrows })
    }

    fn relations_decl(&mut self) -> Result<Decl, ParseError> {
        let name = self.ident()?;
        let relations = self.block(|p| p.lincomb())?;
        Ok(Decl::Relations { name, relations })
    }

    fn lincomb(&mut self) -> Result<Vec<Term>, ParseError> {
        let mut terms = Vec::new();
        let mut sign = if self.eat(&Tok::Minus) {
            true
        } else {
            self.eat(&Tok::Plus);
            false
        };
        loop {
            let (coeff, path) = self.term()?;
            let coeff = if sign { format!("-{coeff}") } else { coeff };
            terms.push(Term { coeff, path });
            sign = match self.peek() {
                Tok::Minus => true,
                Tok::Plus => false,
                _ => break,
            };
            self.advance();
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<(String, Vec<String>), ParseError> {
        let coeff = if matches!(self.peek(), Tok::Int(_)) {
            let c = self.scalar()?;
            self.eat(&Tok::Star);
            c
        } else {
            "1".to_string()
        };
        let mut path = vec![self.ident()?];
        while self.eat(&Tok::Star) {
            path.push(self.ident()?);
        }
        Ok((coeff, path))
    }

    fn args<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T, ParseError>) -> Result<Vec<T>, ParseError> {
        self.expect(Tok::LParen)?;
        let mut out = Vec::new();
        self.skip_nl();
        if self.eat(&Tok::RParen) {
            return Ok(out);
        }
        loop {
            self.skip_nl();
            out.push(item(self)?);
            self.skip_nl();
            if self.eat(&Tok::Comma) {
                continue;
            }
            self.expect(Tok::RParen)?;
            return Ok(out);
        }
    }

    fn fixed_args(&mut self, n: usize) -> Result<Vec<String>, ParseError> {
        let pos = self.pos();
        let a = self.args(|p| p.ident())?;
        if a.len() != n {
            return Err(ParseError::new(pos, format!("expected {n} arguments, found {}", a.len()), Vec::new()));
        }
        Ok(a)
    }

    fn algebra_expr(&mut self) -> Result<AlgebraExpr, ParseError> {
        const FORMS: &[&str] = &["'enveloping'", "'opposite'", "'tensor'", "'product'", "'big'"];
        let kw = match self.peek() {
            Tok::Ident(s) => s.clone(),
            _ => return self.error(FORMS),
        };
        let expr = match kw.as_str() {
            "enveloping" | "opposite" | "big" => {
                self.advance();
                let a = self.fixed_args(1)?.remove(0);
                match kw.as_str() {
                    "enveloping" => AlgebraExpr::Enveloping(a),
                    "opposite" => AlgebraExpr::Opposite(a),
                    _ => AlgebraExpr::Big(a),
                }
            }
            "tensor" | "product" => {
                self.advance();
                let mut a = self.fixed_args(2)?;
                let (x, y) = (a.remove(0), a.remove(0));
                if kw == "tensor" {
                    AlgebraExpr::Tensor(x, y)
                } else {
                    AlgebraExpr::Product(x, y)
                }
            }
            _ => return self.error(FORMS),
        };
        Ok(expr)
    }

    fn module_expr(&mut self) -> Result<ModuleExpr, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError::new(self.pos(), "expression nested too deeply", Vec::new()));
        }
        let r = self.module_expr_inner();
        self.depth -= 1;
        r
    }

    fn module_expr_inner(&mut self) -> Result<ModuleExpr, ParseError> {
        let kw = match self.peek() {
            Tok::Ident(s) => s.clone(),
            _ => return self.error(&["module name", "'simple'", "'proj'", "'regular'", "'sum'", "'syzygy'"]),
        };
        self.advance();
        Ok(match kw.as_str() {
            "simple" | "proj" => {
                let pos = self.pos();
                let mut v = self.args(|p| p.vref())?;
                if v.len() != 1 {
                    return Err(ParseError::new(pos, "expected one vertex", Vec::new()));
                }
                if kw == "simple" {
                    ModuleExpr::Simple(v.remove(0))
                } else {
                    ModuleExpr::Proj(v.remove(0))
                }
            }
            "regular" => ModuleExpr::Regular,
            "sum" => ModuleExpr::Sum(self.args(|p| p.module_expr())?),
            "syzygy" => {
                self.expect(Tok::LParen)?;
                self.skip_nl();
                let m = self.module_expr()?;
                self.skip_nl();
                self.expect(Tok::Comma)?;
                self.skip_nl();
                let n = self.usize_lit()?;
                self.skip_nl();
                self.expect(Tok::RParen)?;
                ModuleExpr::Syzygy(Box::new(m), n)
            }
            _ if RESERVED.contains(&kw.as_str()) => {
                self.i -= 1;
                return self.error(&["module name", "'simple'", "'proj'", "'regular'", "'sum'", "'syzygy'"]);
            }
            _ => ModuleExpr::Name(kw),
        })
    }

    fn matrix(&mut self) -> Result<MatrixLit, ParseError> {
        self.expect(Tok::LBracket)?;
        let mut rows = Vec::new();
        self.skip_nl();
        if self.eat(&Tok::RBracket) {
            return Ok(rows);
        }
        loop {
            self.skip_nl();
            self.expect(Tok::LBracket)?;
            let mut row = Vec::new();
            self.skip_nl();
            if !self.eat(&Tok::RBracket) {
                loop {
                    self.skip_nl();
                    row.push(self.signed_scalar()?);
                    self.skip_nl();
                    if self.eat(&Tok::Comma) {
                        continue;
                    }
                    self.expect(Tok::RBracket)?;
                    break;
                }
            }
            rows.push(row);
            self.skip_nl();
            if self.eat(&Tok::Comma) {
                continue;
            }
            self.expect(Tok::RBracket)?;
            return Ok(rows);
        }
    }

    fn dim_item(&mut self) -> Result<usize, ParseError> {
        self.keyword("dim")?;
        self.usize_lit()
    }

    fn module_body(&mut self) -> Result<ModuleExpr, ParseError> {
        let mut dim = None;
        let mut actions = Vec::new();
        let start = self.pos();
        self.block(|p| {
            if p.is_keyword("dim") {
                dim = Some(p.dim_item()?);
                return Ok(());
            }
            let key = p.label()?;
            p.expect(Tok::Eq)?;
            actions.push((key, p.matrix()?));
            Ok(())
        })?;
        let dim = dim.ok_or_else(|| ParseError::new(start, "module block needs a 'dim' line", Vec::new()))?;
        Ok(ModuleExpr::Matrices { dim, actions })
    }

    fn bimodule_body(&mut self) -> Result<BimoduleExpr, ParseError> {
        let mut dim = None;
        let mut actions = Vec::new();
        let start = self.pos();
        self.block(|p| {
            if p.is_keyword("dim") {
                dim = Some(p.dim_item()?);
                return Ok(());
            }
            let side = if p.is_keyword("left") {
                Side::Left
            } else if p.is_keyword("right") {
                Side::Right
            } else {
                return p.error(&["'dim'", "'left'", "'right'"]);
            };
            p.advance();
            let key = p.label()?;
            p.expect(Tok::Eq)?;
            actions.push((side, key, p.matrix()?));
            Ok(())
        })?;
        let dim = dim.ok_or_else(|| ParseError::new(start, "bimodule block needs a 'dim' line", Vec::new()))?;
        Ok(BimoduleExpr::Matrices { dim, actions })
    }

    fn bimodule_expr(&mut self) -> Result<BimoduleExpr, ParseError> {
        const FORMS: &[&str] = &["bimodule name", "'regular'", "'outer'", "'quotient'"];
        let kw = match self.peek() {
            Tok::Ident(s) => s.clone(),
            _ => return self.error(FORMS),
        };
        Ok(match kw.as_str() {
            "regular" => {
                self.advance();
                BimoduleExpr::Regular
            }
            "outer" => {
                self.advance();
                let pos = self.pos();
                let mut a = self.args(|p| p.module_expr())?;
                if a.len() != 2 {
                    return Err(ParseError::new(pos, "expected two modules", Vec::new()));
                }
                let x = a.remove(0);
                BimoduleExpr::Outer(x, a.remove(0))
            }
            "quotient" => {
                self.advance();
                BimoduleExpr::Quotient(self.fixed_args(1)?.remove(0))
            }
            _ if RESERVED.contains(&kw.as_str()) => return self.error(FORMS),
            _ => {
                self.advance();
                BimoduleExpr::Name(kw)
            }
        })
    }

    fn extension_expr(&mut self) -> Result<ExtensionExpr, ParseError> {
        const FORMS: &[&str] = &["'embed'", "'trivial'", "'split'", "'triangular'", "'arrow_removal'"];
        let kw = match self.peek() {
            Tok::Ident(s) => s.clone(),
            _ => return self.error(FORMS),
        };
        if !FORMS.contains(&format!("'{kw}'").as_str()) {
            return self.error(FORMS);
        }
        self.advance();
        let pos = self.pos();
        // arguments are names, except a trailing matrix
        enum Arg {
            Name(String),
            Matrix(MatrixLit),
        }
        let args = self.args(|p| {
            if matches!(p.peek(), Tok::LBracket) {
                p.matrix().map(Arg::Matrix)
            } else {
                p.ident().map(Arg::Name)
            }
        })?;
        let bad = |msg: &str| Err(ParseError::new(pos, msg.to_string(), Vec::new()));
        let mut names = Vec::new();
        let mut matrix = None;
        for (k, a) in args.into_iter().enumerate() {
            match a {
                Arg::Name(n) if matrix.is_none() => names.push(n),
                Arg::Matrix(m) if matrix.is_none() && k >= 2 => matrix = Some(m),
                _ => return bad("a matrix may only appear as the last argument"),
            }
        }
        let n = names.len();
        Ok(match (kw.as_str(), n, matrix) {
            ("embed", 2, matrix) => {
                let big = names.pop().unwrap();
                ExtensionExpr::Embed { small: names.pop().unwrap(), big, matrix }
            }
            ("trivial", 2, None) => {
                let bimodule = names.pop().unwrap();
                ExtensionExpr::Trivial { algebra: names.pop().unwrap(), bimodule }
            }
            ("split", 2, Some(product)) => {
                let bimodule = names.pop().unwrap();
                ExtensionExpr::Split { algebra: names.pop().unwrap(), bimodule, product }
            }
            ("triangular", 3, None) => {
                let bimodule = names.pop().unwrap();
                let gamma = names.pop().unwrap();
                ExtensionExpr::Triangular { lambda: names.pop().unwrap(), gamma, bimodule }
            }
            ("arrow_removal", 2, None) => {
                let arrow = names.pop().unwrap();
                ExtensionExpr::ArrowRemoval { algebra: names.pop().unwrap(), arrow }
            }
            ("embed", ..) => return bad("embed takes (small, big) or (small, big, matrix)"),
            ("split", ..) => return bad("split takes (algebra, bimodule, product matrix)"),
            ("triangular", ..) => return bad("triangular takes (lambda, gamma, bimodule)"),
            ("arrow_removal", ..) => return bad("arrow_removal takes (algebra, arrow)"),
            _ => return bad("trivial takes (algebra, bimodule)"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_and_expected_sets() {
        let e = parse("field Q\nquiver L {\n  arow a: 1 -> 2\n}").unwrap_err();
        assert_eq!((e.pos.line, e.pos.col), (3, 3));
        assert!(e.expected.contains(&"'arrow'".to_string()));
        let e = parse("extension E = glue(A, B)").unwrap_err();
        assert!(e.expected.contains(&"'trivial'".to_string()));
        assert!(parse("module regular over A = simple(1)").is_err());
    }

    #[test]
    fn lincomb_signs() {
        let f = parse("relations L { -b*a + 2 d*c - 1/2*e*f }").unwrap();
        match &f.decls[0] {
            Decl::Relations { relations, .. } => {
                let c: Vec<_> = relations[0].iter().map(|t| t.coeff.as_str()).collect();
                assert_eq!(c, ["-1", "2", "-1/2"]);
                assert_eq!(relations[0][2].path, ["e", "f"]);
            }
            _ => panic!(),
        }
    }
}
