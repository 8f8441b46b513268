//! Text syntax for polynomials, ideal files, monomial lists and orders.
//!
//! Polynomials are sums of terms such as `x1^2 - 3/2*x2*x3`; `*` between
//! factors is optional and whitespace is ignored. Ideal files hold a
//! `vars: n` header followed by one polynomial per line, with `#`
//! starting a comment.

use gbdepth::{Field, Ideal, Monomial, MonomialIdeal, MonomialOrder, MonomialOrderSpec, Polynomial};
use thiserror::Error;

/// A diagnostic pinned to a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col0: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str, line: usize, col0: usize) -> Self {
        Cursor { src: src.as_bytes(), pos: 0, line, col0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError::at(self.line, self.col0 + self.pos + 1, message)
    }

    fn found(&mut self) -> String {
        match self.peek() {
            Some(c) => format!("'{}'", c as char),
            None => "end of input".into(),
        }
    }

    /// Digits with no interior whitespace.
    fn number(&mut self, what: &str) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            self.pos = start;
            let found = self.found();
            return Err(self.err(format!("expected {what}, found {found}")));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse::<i64>()
            .map(|v| v as u64)
            .map_err(|_| ParseError::at(self.line, self.col0 + start + 1, format!("{what} {text} is too large")))
    }
}

/// Variable count needed by the text: the largest `xK` index seen.
pub fn max_variable(text: &str) -> usize {
    let b = text.as_bytes();
    let mut best = 0;
    let mut i = 0;
    while i < b.len() {
        if b[i] == b'x' {
            let mut j = i + 1;
            while j < b.len() && b[j].is_ascii_digit() {
                j += 1;
            }
            if let Ok(k) = text[i + 1..j].parse::<usize>() {
                best = best.max(k);
            }
            i = j;
        } else {
            i += 1;
        }
    }
    best
}


fn parse_poly_at<C: Field>(
    text: &str,
    n: usize,
    order: &MonomialOrder,
    line: usize,
    col0: usize,
) -> Result<Polynomial<C>, ParseError> {
    let mut cur = Cursor::new(text, line, col0);
    let mut terms: Vec<(C, Monomial)> = Vec::new();
    if cur.peek().is_none() {
        return Err(cur.err("empty polynomial"));
    }
    let mut first = true;
    loop {
        let mut negative = false;
        match cur.peek() {
            Some(b'+') => {
                cur.bump();
            }
            Some(b'-') => {
                cur.bump();
                negative = true;
            }
            None => break,
            Some(_) if first => {}
            Some(_) => {
                let found = cur.found();
                return Err(cur.err(format!("expected '+' or '-', found {found}")));
            }
        }
        first = false;
        let mut coeff = C::one();
        let mut exps = vec![0u32; n];
        let mut factors = 0;
        if matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
            let num = cur.number("coefficient")?;
            let mut den = 1;
            if cur.peek() == Some(b'/') {
                cur.bump();
                den = cur.number("denominator")?;
                if den == 0 {
                    return Err(cur.err("zero denominator"));
                }
            }
            coeff = C::from_i64(num as i64).div(&C::from_i64(den as i64));
            factors += 1;
        }
        loop {
            match cur.peek() {
                Some(b'*') if factors > 0 => {
                    cur.bump();
                    if cur.peek() != Some(b'x') {
                        let found = cur.found();
                        return Err(cur.err(format!("expected a variable after '*', found {found}")));
                    }
                }
                Some(b'x') => {}
                _ => break,
            }
            let var_col = cur.col0 + cur.pos + 1;
            cur.bump();
            let k = cur.number("variable index")? as usize;
            if k == 0 || k > n {
                return Err(ParseError::at(line, var_col, format!("variable x{k} outside x1..x{n}")));
            }
            let mut e = 1u32;
            if cur.peek() == Some(b'^') {
                cur.bump();
                if cur.peek() == Some(b'-') {
                    return Err(cur.err("negative exponent"));
                }
                e = u32::try_from(cur.number("exponent")?).map_err(|_| cur.err("exponent is too large"))?;
            }
            exps[k - 1] += e;
            factors += 1;
        }
        if factors == 0 {
            let found = cur.found();
            return Err(cur.err(format!("expected a term, found {found}")));
        }
        if negative {
            coeff = -coeff;
        }
        terms.push((coeff, Monomial::new(exps)));
    }
    Polynomial::from_terms(n, terms, order).map_err(|e| ParseError::at(line, col0 + 1, e.to_string()))
}

/// One polynomial in `n` variables, sorted under `order`.
pub fn parse_polynomial<C: Field>(text: &str, n: usize, order: &MonomialOrder) -> Result<Polynomial<C>, ParseError> {
    parse_poly_at(text, n, order, 1, 0)
}

/// Strips a `#` comment, returning the code part.
fn code(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

/// An ideal file: a `vars: n` header, then one polynomial per line.
pub fn parse_ideal_file<C: Field>(text: &str) -> Result<Ideal<C>, ParseError> {
    let mut n = None;
    let mut gens = Vec::new();
    let mut order = None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = code(raw);
        if body.trim().is_empty() {
            continue;
        }
        let Some(nv) = n else {
            let col = body.len() - body.trim_start().len() + 1;
            let rest = body
                .trim_start()
                .strip_prefix("vars:")
                .ok_or_else(|| ParseError::at(line, col, "expected header 'vars: n'"))?;
            let value: usize = rest
                .trim()
                .parse()
                .map_err(|_| ParseError::at(line, col + 5, format!("invalid variable count '{}'", rest.trim())))?;
            if value == 0 {
                return Err(ParseError::at(line, col + 5, "variable count must be positive"));
            }
            n = Some(value);
            order = Some(MonomialOrder::lex(value));
            continue;
        };
        gens.push(parse_poly_at(body, nv, order.as_ref().expect("set with n"), line, 0)?);
    }
    let n = n.ok_or_else(|| ParseError::at(1, 1, "missing header 'vars: n'"))?;
    Ideal::new(n, gens).map_err(|e| ParseError::at(1, 1, e.to_string()))
}

/// Comma-separated polynomials on one line. Without `n`, the ring is
/// `K[x1..xk]` for the largest index `k` mentioned.
pub fn parse_ideal_inline<C: Field>(text: &str, n: Option<usize>) -> Result<Ideal<C>, ParseError> {
    let n = n.unwrap_or_else(|| max_variable(text).max(1));
    let order = MonomialOrder::lex(n);
    let mut gens = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        gens.push(parse_poly_at(piece, n, &order, 1, offset)?);
        offset += piece.len() + 1;
    }
    Ideal::new(n, gens).map_err(|e| ParseError::at(1, 1, e.to_string()))
}

/// Comma-separated monomials with coefficient 1, e.g. `x1^2, x1*x2`.
pub fn parse_monomials(text: &str, n: Option<usize>) -> Result<MonomialIdeal, ParseError> {
    let n = n.unwrap_or_else(|| max_variable(text).max(1));
    let order = MonomialOrder::lex(n);
    let mut gens = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        let p: Polynomial<gbdepth::Rational> = parse_poly_at(piece, n, &order, 1, offset)?;
        let col = offset + piece.len() - piece.trim_start().len() + 1;
        match p.terms() {
            [t] if t.coeff.is_one() => gens.push(t.mono.clone()),
            _ => return Err(ParseError::at(1, col, format!("'{}' is not a monomial", piece.trim()))),
        }
        offset += piece.len() + 1;
    }
    Ok(MonomialIdeal::new(n, gens))
}

/// Order grammar: `lex`, `lex:x3>x1>x2`, `deglex`, `weight:1,2,2;tie=<order>`.
/// `lex` and `deglex` expand over `n` variables.
pub fn parse_order(text: &str, n: usize) -> Result<MonomialOrderSpec, ParseError> {
    let lead = text.len() - text.trim_start().len();
    parse_order_at(text.trim(), n, lead)
}

fn parse_order_at(text: &str, n: usize, col0: usize) -> Result<MonomialOrderSpec, ParseError> {
    let err = |offset: usize, m: String| ParseError::at(1, col0 + offset + 1, m);
    if text == "lex" {
        return Ok(MonomialOrderSpec::lex(n));
    }
    if text == "deglex" {
        return Ok(MonomialOrderSpec::weight_then(vec![1; n], MonomialOrderSpec::lex(n)));
    }
    if let Some(rest) = text.strip_prefix("lex:") {
        let mut perm = Vec::new();
        let mut offset = 4;
        for item in rest.split('>') {
            let t = item.trim();
            let at = offset + item.len() - item.trim_start().len();
            let k: usize = t
                .strip_prefix('x')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| err(at, format!("expected a variable like x1, found '{t}'")))?;
            if k == 0 || k > n {
                return Err(err(at, format!("variable x{k} outside x1..x{n}")));
            }
            if perm.contains(&(k - 1)) {
                return Err(err(at, format!("variable x{k} listed twice")));
            }
            perm.push(k - 1);
            offset += item.len() + 1;
        }
        if perm.len() != n {
            return Err(err(4, format!("lex permutation lists {} of {n} variables", perm.len())));
        }
        return Ok(MonomialOrderSpec::Lex(perm));
    }
    if let Some(rest) = text.strip_prefix("weight:") {
        let (weights, tie, tie_at) = match rest.find(';') {
            Some(k) => (&rest[..k], Some(&rest[k + 1..]), 7 + k + 1),
            None => (rest, None, 0),
        };
        let mut w = Vec::new();
        let mut offset = 7;
        for item in weights.split(',') {
            let t = item.trim();
            let at = offset + item.len() - item.trim_start().len();
            w.push(t.parse::<i64>().map_err(|_| err(at, format!("invalid weight '{t}'")))?);
            offset += item.len() + 1;
        }
        if w.len() != n {
            return Err(err(7, format!("weight vector has {} entries, ring has {n} variables", w.len())));
        }
        let tie = match tie {
            None => MonomialOrderSpec::lex(n),
            Some(t) => {
                let lead = t.len() - t.trim_start().len();
                let body = t
                    .trim_start()
                    .strip_prefix("tie=")
                    .ok_or_else(|| err(tie_at + lead, "expected 'tie=' after ';'".into()))?;
                parse_order_at(body.trim(), n, col0 + tie_at + lead + 4)?
            }
        };
        return Ok(MonomialOrderSpec::weight_then(w, tie));
    }
    Err(err(0, format!("unknown order '{text}'; expected lex, lex:..., deglex or weight:...")))
}

/// Canonical text of an ideal file, parseable by [`parse_ideal_file`].
pub fn print_ideal_file<C: Field>(ideal: &Ideal<C>) -> String {
    let mut out = format!("vars: {}\n", ideal.nvars());
    for g in ideal.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use gbdepth::{Gf32003, Rational};

    fn lex(n: usize) -> MonomialOrder {
        MonomialOrder::lex(n)
    }

    #[test]
    fn parses_binomials() {
        let p: Polynomial<Rational> = parse_polynomial("x1^2 - x2*x3", 3, &lex(3)).unwrap();
        assert_eq!(p.to_string(), "x1^2 - x2*x3");
        let q: Polynomial<Rational> = parse_polynomial(" - x2 x3 + x1 ^ 2", 3, &lex(3)).unwrap();
        assert_eq!(p, q);
        let r: Polynomial<Rational> = parse_polynomial("3/2x1x2 + 2*x3 - 1", 3, &lex(3)).unwrap();
        assert_eq!(r.to_string(), "3/2*x1*x2 + 2*x3 - 1");
    }

    #[test]
    fn cancellation_gives_zero() {
        let p: Polynomial<Rational> = parse_polynomial("x1 - x1", 1, &lex(1)).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn prime_field_coefficients() {
        let p: Polynomial<Gf32003> = parse_polynomial("32004*x1 + 1/2", 1, &lex(1)).unwrap();
        assert_eq!(p.to_string(), "x1 - 16001");
    }

    #[test]
    fn diagnostics() {
        let e = parse_polynomial::<Rational>("x1^-1", 1, &lex(1)).unwrap_err();
        assert_eq!((e.line, e.column), (1, 4));
        assert!(e.message.contains("negative exponent"));
        let e = parse_polynomial::<Rational>("x1 + x4", 3, &lex(3)).unwrap_err();
        assert_eq!(e.column, 6);
        let e = parse_polynomial::<Rational>("x1 + + x2", 2, &lex(2)).unwrap_err();
        assert_eq!(e.column, 6);
        let e = parse_polynomial::<Rational>("x1 x2 y", 2, &lex(2)).unwrap_err();
        assert_eq!(e.column, 7);
        let e = parse_polynomial::<Rational>("1/0", 2, &lex(2)).unwrap_err();
        assert!(e.message.contains("zero denominator"));
        assert!(parse_polynomial::<Rational>("", 2, &lex(2)).is_err());
        assert!(parse_polynomial::<Rational>("x1*", 2, &lex(2)).is_err());
    }

    #[test]
    fn ideal_files() {
        let src = "# one block\nvars: 3\nx1^2 - x2*x3\n\nx1*x2 - x3^2  # second\nx1*x3 - x2^2\n";
        let i: Ideal<Rational> = parse_ideal_file(src).unwrap();
        assert_eq!(i.generators().len(), 3);
        assert_eq!(parse_ideal_file::<Rational>(&print_ideal_file(&i)).unwrap(), i);
        let e = parse_ideal_file::<Rational>("x1\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        let e = parse_ideal_file::<Rational>("vars: 2\nx1\n x1 ** x2\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 6));
        assert!(parse_ideal_file::<Rational>("vars: two\n").is_err());
        assert!(parse_ideal_file::<Rational>("# nothing\n").is_err());
    }

    #[test]
    fn inline_ideals_and_monomials() {
        let i: Ideal<Rational> = parse_ideal_inline("x1^2 - x2*x3, x1*x2 - x3^2", None).unwrap();
        assert_eq!(i.nvars(), 3);
        let e = parse_ideal_inline::<Rational>("x1, x2^-2", None).unwrap_err();
        assert_eq!(e.column, 8);
        let j = parse_monomials("x1^2,x1*x2,x1*x3,x2^3", Some(3)).unwrap();
        assert_eq!(j.generators().len(), 4);
        let e = parse_monomials("x1, 2*x2", None).unwrap_err();
        assert_eq!(e.column, 5);
        assert!(parse_monomials("x1 + x2", None).is_err());
    }

    #[test]
    fn orders_round_trip() {
        for (text, n) in [("lex", 3), ("lex:x3>x1>x2", 3), ("weight:1,2,2;tie=lex", 3), ("weight:1,1;tie=lex:x2>x1", 2)] {
            let spec = parse_order(text, n).unwrap();
            assert_eq!(spec.to_string(), text);
            assert_eq!(parse_order(&spec.to_string(), n).unwrap(), spec);
        }
        let deg = parse_order("deglex", 2).unwrap();
        assert_eq!(deg.to_string(), "weight:1,1;tie=lex");
        assert_eq!(parse_order("weight:1,2,2", 3).unwrap(), parse_order("weight:1,2,2;tie=lex", 3).unwrap());
    }

    #[test]
    fn order_diagnostics() {
        let e = parse_order("lex:x1>x4>x2", 3).unwrap_err();
        assert_eq!(e.column, 8);
        let e = parse_order("weight:1,a,2", 3).unwrap_err();
        assert_eq!(e.column, 10);
        let e = parse_order("weight:1,2,2;lex", 3).unwrap_err();
        assert_eq!(e.column, 14);
        let e = parse_order("weight:1,2,2;tie=foo", 3).unwrap_err();
        assert_eq!(e.column, 18);
        assert!(parse_order("revlex", 3).is_err());
        assert!(parse_order("weight:1,2", 3).is_err());
        assert!(parse_order("lex:x1>x1", 2).is_err());
    }
}
