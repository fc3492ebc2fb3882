use std::fmt;

use crate::FunctorError;

/// Closed grammar of functors evaluable at every `F₂ᵏ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FunctorExpr {
    Exterior(usize),
    Sym(usize),
    Divided(usize),
    TensorPower(usize),
    Const(usize),
    PBar,
    IBar,
    Tensor(Box<FunctorExpr>, Box<FunctorExpr>),
    /// `Λⁿ ∘ G`.
    Compose(usize, Box<FunctorExpr>),
    Dual(Box<FunctorExpr>),
    /// Largest subfunctor of degree at most `n`.
    PolyTrunc(usize, Box<FunctorExpr>),
    /// Degree-`n` layer of the polynomial filtration.
    PolyGraded(usize, Box<FunctorExpr>),
    ImageOf(NatTransId),
    KernelOf(NatTransId),
    /// `Λ^{λ_1} ⊗ … ⊗ Λ^{λ_r}`; zero entries are constant factors.
    MultiExterior(Vec<usize>),
    /// Direct sum, blocks in order.
    Sum(Vec<FunctorExpr>),
}

/// Named natural transformations. Parameters follow the usual index
/// conventions; matrices are built per dimension by [`crate::nat`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NatTransId {
    /// `Λ^i ⊗ Λ^j → Λ^{i+t} ⊗ Λ^{j-t}`: coproduct on the second factor, then product.
    Theta { i: usize, j: usize, t: usize },
    /// `Λ^{i+t} ⊗ Λ^{j-t} → Λ^i ⊗ Λ^j`, built from its own formula.
    DTheta { i: usize, j: usize, t: usize },
    /// Factor swap `Λ^i ⊗ Λ^j → Λ^j ⊗ Λ^i`.
    Tau { i: usize, j: usize },
    /// Block-stacked θ map whose kernel is the Weyl functor.
    Psi(Vec<usize>),
    /// `θ ∘ Dθ` through `Λ^{i-1} ⊗ Λ^{j+1}`.
    Pi { i: usize, j: usize },
    /// `Dθ ∘ θ` through `Λ^{i+1} ⊗ Λ^{j-1}`.
    PiPrime { i: usize, j: usize },
    Product { i: usize, j: usize },
    Coproduct { i: usize, j: usize },
    /// Antisymmetrize `Λ^r` into `T^r`, regroup, wedge one vector onto each factor.
    J { lambda: Vec<usize>, r: usize },
    /// Iterated `J` factored through `Λⁿ(Λ^r)`, `r = len(lambda)`.
    W { lambda: Vec<usize>, n: usize },
    /// `[u]∧[v] ↦ ([u]+[v]) ∧ [u+v]` on `Λ²(P̄)`.
    Grass,
    /// Dual of [`NatTransId::Grass`] on `Λ²(Ī)` in the monomial basis.
    DualGrass,
    /// `Λ²(P̄) ⊗ Λⁿ → Λ²(P̄) ⊗ Λⁿ(Λ³)`.
    Gn(usize),
    /// `P̄^{⊗2} ⊗ Λ^{n-1} → Λ²(P̄) ⊗ Λⁿ`.
    Hn(usize),
    DGn(usize),
    DHn(usize),
    /// Degree `2i+1` layer of `L(2)` projected onto `Λ^{i+1} ⊗ Λ^i`.
    FLayer(usize),
    /// Degree `2i+3` layer of `D̄(2)` projected onto `Λ^{i+2} ⊗ Λ^{i+1}`, then θ.
    GLayer(usize),
    /// `Λ^i ⊗ Λ^j → Λ^k ⊗ Λ^l` through the graded dual projector on `Λ²(Ī)`.
    GradedDualGrass { i: usize, j: usize, k: usize, l: usize },
    /// Transpose, between the duals of target and source.
    Dual(Box<NatTransId>),
    /// Composite, applied right to left.
    Comp(Vec<NatTransId>),
    /// `t ⊗ id_E`.
    TensorId(Box<NatTransId>, Box<FunctorExpr>),
    /// `id_E ⊗ t`.
    IdTensor(Box<FunctorExpr>, Box<NatTransId>),
}

impl FunctorExpr {
    pub fn tensor(a: FunctorExpr, b: FunctorExpr) -> Self {
        FunctorExpr::Tensor(Box::new(a), Box::new(b))
    }

    pub fn compose(n: usize, g: FunctorExpr) -> Self {
        FunctorExpr::Compose(n, Box::new(g))
    }

    pub fn dual(e: FunctorExpr) -> Self {
        FunctorExpr::Dual(Box::new(e))
    }

    pub fn weyl(lambda: &[usize]) -> Self {
        FunctorExpr::KernelOf(NatTransId::Psi(lambda.to_vec()))
    }

    pub fn lambda(lambda: &[usize]) -> Self {
        FunctorExpr::MultiExterior(lambda.to_vec())
    }

    pub fn p21() -> Self {
        FunctorExpr::ImageOf(NatTransId::Grass)
    }

    pub fn gbar2() -> Self {
        FunctorExpr::KernelOf(NatTransId::Grass)
    }

    pub fn l2() -> Self {
        FunctorExpr::ImageOf(NatTransId::DualGrass)
    }

    pub fn dbar2() -> Self {
        FunctorExpr::KernelOf(NatTransId::DualGrass)
    }

    pub fn parse(text: &str) -> Result<Self, FunctorError> {
        Parser::new(text).parse_all()
    }
}

impl NatTransId {
    pub fn theta(i: usize, j: usize, t: usize) -> Self {
        NatTransId::Theta { i, j, t }
    }

    pub fn d_theta(i: usize, j: usize, t: usize) -> Self {
        NatTransId::DTheta { i, j, t }
    }

    pub fn dual(t: NatTransId) -> Self {
        NatTransId::Dual(Box::new(t))
    }

    /// `a ∘ b`.
    pub fn after(a: NatTransId, b: NatTransId) -> Self {
        NatTransId::Comp(vec![a, b])
    }
}

fn seq(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for FunctorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FunctorExpr::*;
        match self {
            Exterior(n) => write!(f, "L{n}"),
            Sym(n) => write!(f, "S{n}"),
            Divided(n) => write!(f, "G{n}"),
            TensorPower(n) => write!(f, "T{n}"),
            Const(d) => write!(f, "C{d}"),
            PBar => write!(f, "Pbar"),
            IBar => write!(f, "Ibar"),
            Tensor(a, b) => {
                // products nest to the right when parsed
                if matches!(**a, Sum(_) | Tensor(..)) { write!(f, "({a})")? } else { write!(f, "{a}")? }
                write!(f, "*")?;
                if matches!(**b, Sum(_)) { write!(f, "({b})") } else { write!(f, "{b}") }
            }
            Compose(n, g) => write!(f, "L{n}({g})"),
            Dual(e) => write!(f, "D({e})"),
            PolyTrunc(n, e) => write!(f, "p{n}({e})"),
            PolyGraded(n, e) => write!(f, "h{n}({e})"),
            ImageOf(NatTransId::Grass) => write!(f, "P21"),
            KernelOf(NatTransId::Grass) => write!(f, "Gbar2"),
            ImageOf(NatTransId::DualGrass) => write!(f, "Ltwo"),
            KernelOf(NatTransId::DualGrass) => write!(f, "Dbar2"),
            KernelOf(NatTransId::Psi(l)) => write!(f, "W[{}]", seq(l)),
            ImageOf(t) => write!(f, "im({t})"),
            KernelOf(t) => write!(f, "ker({t})"),
            MultiExterior(l) => write!(f, "Lam[{}]", seq(l)),
            Sum(items) => {
                if items.is_empty() {
                    return write!(f, "C0");
                }
                for (n, e) in items.iter().enumerate() {
                    if n > 0 {
                        write!(f, "+")?;
                    }
                    if matches!(e, Sum(_)) { write!(f, "({e})")? } else { write!(f, "{e}")? }
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for NatTransId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use NatTransId::*;
        match self {
            Theta { i, j, t } => write!(f, "theta[{i},{j},{t}]"),
            DTheta { i, j, t } => write!(f, "dtheta[{i},{j},{t}]"),
            Tau { i, j } => write!(f, "tau[{i},{j}]"),
            Psi(l) => write!(f, "psi[{}]", seq(l)),
            Pi { i, j } => write!(f, "Pi[{i},{j}]"),
            PiPrime { i, j } => write!(f, "PiP[{i},{j}]"),
            Product { i, j } => write!(f, "mul[{i},{j}]"),
            Coproduct { i, j } => write!(f, "comul[{i},{j}]"),
            J { lambda, r } => write!(f, "j[{};{r}]", seq(lambda)),
            W { lambda, n } => write!(f, "w[{};{n}]", seq(lambda)),
            Grass => write!(f, "Grass"),
            DualGrass => write!(f, "DGrass"),
            Gn(n) => write!(f, "g[{n}]"),
            Hn(n) => write!(f, "h[{n}]"),
            DGn(n) => write!(f, "Dg[{n}]"),
            DHn(n) => write!(f, "Dh[{n}]"),
            FLayer(i) => write!(f, "f[{i}]"),
            GLayer(i) => write!(f, "gl[{i}]"),
            GradedDualGrass { i, j, k, l } => write!(f, "hDGrass[{i},{j},{k},{l}]"),
            Dual(t) => write!(f, "D({t})"),
            Comp(ts) => {
                write!(f, "(")?;
                for (n, t) in ts.iter().enumerate() {
                    if n > 0 {
                        write!(f, " o ")?;
                    }
                    write!(f, "{t}")?;
                }
                write!(f, ")")
            }
            TensorId(t, e) => write!(f, "({t} x id[{e}])"),
            IdTensor(e, t) => write!(f, "(id[{e}] x {t})"),
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { text, bytes: text.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, FunctorError> {
        Err(FunctorError::Parse { text: self.text.to_string(), pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), FunctorError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        self.text[start..self.pos].to_string()
    }

    fn number(&mut self) -> Result<usize, FunctorError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        self.text[start..self.pos].parse().or_else(|_| self.err("number out of range"))
    }

    fn list(&mut self, open: u8, close: u8) -> Result<Vec<usize>, FunctorError> {
        self.expect(open)?;
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(self.number()?);
            if self.eat(close) {
                return Ok(out);
            }
            if !self.eat(b',') && !self.eat(b';') {
                return self.err(format!("expected ',' or '{}'", close as char));
            }
        }
    }

    fn parse_all(mut self) -> Result<FunctorExpr, FunctorError> {
        let e = self.sum()?;
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(e)
    }

    fn sum(&mut self) -> Result<FunctorExpr, FunctorError> {
        let mut items = vec![self.product()?];
        while self.eat(b'+') {
            items.push(self.product()?);
        }
        Ok(if items.len() == 1 { items.pop().unwrap() } else { FunctorExpr::Sum(items) })
    }

    fn product(&mut self) -> Result<FunctorExpr, FunctorError> {
        let mut items = vec![self.atom()?];
        while self.eat(b'*') {
            items.push(self.atom()?);
        }
        // right-nested, matching the display form
        let mut e = items.pop().unwrap();
        while let Some(a) = items.pop() {
            e = FunctorExpr::tensor(a, e);
        }
        Ok(e)
    }

    fn paren_expr(&mut self) -> Result<FunctorExpr, FunctorError> {
        self.expect(b'(')?;
        let e = self.sum()?;
        self.expect(b')')?;
        Ok(e)
    }

    fn atom(&mut self) -> Result<FunctorExpr, FunctorError> {
        use FunctorExpr::*;
        if self.peek() == Some(b'(') {
            return self.paren_expr();
        }
        let start = self.pos;
        let id = self.ident();
        let e = match id.as_str() {
            "L" => {
                let n = self.number()?;
                if self.peek() == Some(b'(') {
                    Compose(n, Box::new(self.paren_expr()?))
                } else {
                    Exterior(n)
                }
            }
            "S" => Sym(self.number()?),
            "G" => Divided(self.number()?),
            "T" => TensorPower(self.number()?),
            "C" => Const(self.number()?),
            "Pbar" => PBar,
            "Ibar" => IBar,
            "Ltwo" => FunctorExpr::l2(),
            "P" => match self.number()? {
                21 => FunctorExpr::p21(),
                _ => return self.err("only P21 is a named P functor"),
            },
            "Gbar" | "Dbar" => {
                if self.number()? != 2 {
                    return self.err("expected Gbar2 or Dbar2");
                }
                if id == "Gbar" { FunctorExpr::gbar2() } else { FunctorExpr::dbar2() }
            }
            "D" => Dual(Box::new(self.paren_expr()?)),
            "p" => {
                let n = self.number()?;
                PolyTrunc(n, Box::new(self.paren_expr()?))
            }
            "h" => {
                let n = self.number()?;
                PolyGraded(n, Box::new(self.paren_expr()?))
            }
            "W" => KernelOf(NatTransId::Psi(self.list(b'[', b']')?)),
            "Lam" => MultiExterior(self.list(b'[', b']')?),
            "im" | "ker" => {
                self.expect(b'(')?;
                let t = self.nat()?;
                self.expect(b')')?;
                if id == "im" { ImageOf(t) } else { KernelOf(t) }
            }
            "" => return self.err("expected a functor"),
            _ => {
                self.pos = start;
                self.skip_ws();
                return self.err(format!("unknown functor name '{id}'"));
            }
        };
        Ok(e)
    }

    fn nat(&mut self) -> Result<NatTransId, FunctorError> {
        use NatTransId::*;
        let start = self.pos;
        let id = self.ident();
        let t = match id.as_str() {
            "Grass" => Grass,
            "DGrass" => DualGrass,
            "D" => {
                self.expect(b'(')?;
                let t = self.nat()?;
                self.expect(b')')?;
                NatTransId::dual(t)
            }
            "theta" | "dtheta" => {
                let v = self.list(b'[', b']')?;
                let [i, j, t] = v[..] else { return self.err("expected three indices") };
                if id == "theta" { Theta { i, j, t } } else { DTheta { i, j, t } }
            }
            "tau" | "Pi" | "PiP" | "mul" | "comul" => {
                let v = self.list(b'[', b']')?;
                let [i, j] = v[..] else { return self.err("expected two indices") };
                match id.as_str() {
                    "tau" => Tau { i, j },
                    "Pi" => Pi { i, j },
                    "PiP" => PiPrime { i, j },
                    "mul" => Product { i, j },
                    _ => Coproduct { i, j },
                }
            }
            "psi" => Psi(self.list(b'[', b']')?),
            "g" | "h" | "Dg" | "Dh" | "f" | "gl" => {
                let v = self.list(b'[', b']')?;
                let [n] = v[..] else { return self.err("expected one index") };
                match id.as_str() {
                    "g" => Gn(n),
                    "h" => Hn(n),
                    "Dg" => DGn(n),
                    "Dh" => DHn(n),
                    "f" => FLayer(n),
                    _ => GLayer(n),
                }
            }
            _ => {
                self.pos = start;
                self.skip_ws();
                return self.err(format!("unknown natural transformation '{id}'"));
            }
        };
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals_from_the_grammar() {
        use FunctorExpr::*;
        assert_eq!(FunctorExpr::parse("L3").unwrap(), Exterior(3));
        assert!(FunctorExpr::parse(" e1 ").is_err());
        assert_eq!(FunctorExpr::parse("L1*L2").unwrap(), FunctorExpr::tensor(Exterior(1), Exterior(2)));
        assert_eq!(FunctorExpr::parse("L2(L3)").unwrap(), FunctorExpr::compose(2, Exterior(3)));
        assert_eq!(FunctorExpr::parse("D(S2)").unwrap(), FunctorExpr::dual(Sym(2)));
        assert_eq!(FunctorExpr::parse("p3 ( Ibar )").unwrap(), PolyTrunc(3, Box::new(IBar)));
        assert_eq!(FunctorExpr::parse("W[3,1]").unwrap(), FunctorExpr::weyl(&[3, 1]));
        assert_eq!(FunctorExpr::parse("Lam[3, 2, 1]").unwrap(), MultiExterior(vec![3, 2, 1]));
        assert_eq!(FunctorExpr::parse("Gbar2").unwrap(), FunctorExpr::gbar2());
        assert_eq!(FunctorExpr::parse("im(theta[2,1,1])").unwrap(), ImageOf(NatTransId::theta(2, 1, 1)));
    }

    #[test]
    fn parse_errors_carry_positions() {
        match FunctorExpr::parse("L2*Q3") {
            Err(FunctorError::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("{other:?}"),
        }
        match FunctorExpr::parse("Lam[3,2") {
            Err(FunctorError::Parse { pos, .. }) => assert_eq!(pos, 7),
            other => panic!("{other:?}"),
        }
        assert!(FunctorExpr::parse("L2)").is_err());
    }

    #[test]
    fn display_roundtrip() {
        for s in [
            "L3", "S2", "G2", "T2", "C1", "Pbar", "Ibar", "L1*L2*S3", "(L1+S2)*G2", "L2(Pbar)", "D(L2(Ibar))", "p3(Ibar)",
            "h3(Ltwo)", "W[3,1]", "Lam[2,1,0]", "P21", "Gbar2", "Ltwo", "Dbar2", "ker(theta[2,2,1])", "im(D(Grass))", "L1+L2",
        ] {
            let e = FunctorExpr::parse(s).unwrap();
            assert_eq!(e.to_string(), s);
            assert_eq!(FunctorExpr::parse(&e.to_string()).unwrap(), e);
        }
    }
}
