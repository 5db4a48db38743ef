//! Expression formats: a JSON tree and the prefix text form printed by `Display`.

use atomwidth_core::cwx::CwError;
use atomwidth_core::{CwExpr, Label};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExprError {
    #[error("at byte {pos}: {msg}")]
    Text { pos: usize, msg: String },
    #[error("bad JSON expression: {0}")]
    Tree(String),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Cw(#[from] CwError),
}

/// Tagged tree: `{"op": "create", "v", "label"}`, `{"op": "union", "left", "right"}`,
/// `{"op": "join", "i", "j", "child"}`, `{"op": "relabel", "from", "to", "child"}`.
pub fn to_json(e: &CwExpr) -> Value {
    match e {
        CwExpr::Create { v, label } => json!({"op": "create", "v": v, "label": label}),
        CwExpr::Union(a, b) => json!({"op": "union", "left": to_json(a), "right": to_json(b)}),
        CwExpr::Join { i, j, child } => json!({"op": "join", "i": i, "j": j, "child": to_json(child)}),
        CwExpr::Relabel { from, to, child } => json!({"op": "relabel", "from": from, "to": to, "child": to_json(child)}),
    }
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, ExprError> {
    v.get(key).ok_or_else(|| ExprError::Tree(format!("missing field `{key}`")))
}

fn int<T: TryFrom<u64>>(v: &Value, key: &str) -> Result<T, ExprError> {
    field(v, key)?
        .as_u64()
        .and_then(|x| T::try_from(x).ok())
        .ok_or_else(|| ExprError::Tree(format!("field `{key}` is not a valid non-negative integer")))
}

pub fn from_json(v: &Value) -> Result<CwExpr, ExprError> {
    let op = field(v, "op")?.as_str().ok_or_else(|| ExprError::Tree("`op` is not a string".into()))?;
    Ok(match op {
        "create" => CwExpr::try_create(int(v, "v")?, int(v, "label")?)?,
        "union" => CwExpr::union(from_json(field(v, "left")?)?, from_json(field(v, "right")?)?),
        "join" => CwExpr::try_join(int(v, "i")?, int(v, "j")?, from_json(field(v, "child")?)?)?,
        "relabel" => CwExpr::try_relabel(int(v, "from")?, int(v, "to")?, from_json(field(v, "child")?)?)?,
        other => return Err(ExprError::Tree(format!("unknown op `{other}`"))),
    })
}

/// Parses JSON text without the default nesting limit, since expressions can be deep.
pub fn parse_json(text: &str) -> Result<CwExpr, ExprError> {
    let mut de = serde_json::Deserializer::from_str(text);
    de.disable_recursion_limit();
    let v = serde::Deserialize::deserialize(&mut de)?;
    de.end()?;
    from_json(&v)
}

struct Parser<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Text { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        let rest = &self.s[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.s[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<(), ExprError> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.err(format!("expected `{tok}`"))
        }
    }

    fn number<T: std::str::FromStr>(&mut self) -> Result<T, ExprError> {
        self.skip_ws();
        let digits = self.s[self.pos..].bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return self.err("expected a number");
        }
        let t = &self.s[self.pos..self.pos + digits];
        match t.parse() {
            Ok(x) => {
                self.pos += digits;
                Ok(x)
            }
            Err(_) => self.err(format!("number `{t}` out of range")),
        }
    }

    fn union(&mut self) -> Result<CwExpr, ExprError> {
        let mut e = self.term()?;
        while self.eat("⊕") || self.eat("+") {
            e = CwExpr::union(e, self.term()?);
        }
        Ok(e)
    }

    fn inner(&mut self) -> Result<CwExpr, ExprError> {
        self.expect("(")?;
        let e = self.union()?;
        self.expect(")")?;
        Ok(e)
    }

    fn term(&mut self) -> Result<CwExpr, ExprError> {
        if self.eat("η") || self.eat("eta") {
            let i: Label = self.number()?;
            self.expect(",")?;
            let j = self.number()?;
            return Ok(CwExpr::try_join(i, j, self.inner()?)?);
        }
        if self.eat("ρ") || self.eat("rho") {
            let from: Label = self.number()?;
            if !self.eat("→") {
                self.expect("->")?;
            }
            let to = self.number()?;
            return Ok(CwExpr::try_relabel(from, to, self.inner()?)?);
        }
        self.skip_ws();
        if self.s[self.pos..].starts_with('(') {
            return self.inner();
        }
        let label: Label = self.number()?;
        self.expect("(")?;
        let v = self.number()?;
        self.expect(")")?;
        Ok(CwExpr::try_create(v, label)?)
    }
}

/// Parses the prefix form, for example `η2,1(2(1) ⊕ 1(0))`. ASCII spellings `eta`, `rho`,
/// `->` and `+` are accepted too.
pub fn parse_text(s: &str) -> Result<CwExpr, ExprError> {
    let mut p = Parser { s, pos: 0 };
    let e = p.union()?;
    p.skip_ws();
    if p.pos != s.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// JSON if the text starts with `{`, else the prefix form.
pub fn parse_any(text: &str) -> Result<CwExpr, ExprError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text.trim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> CwExpr {
        parse_text("η3,2(3(3) ⊕ ρ3→2(ρ2→1(η3,2(3(2) ⊕ η2,1(2(1) ⊕ 1(0))))))").unwrap()
    }

    #[test]
    fn text_round_trip() {
        let e = p4();
        assert_eq!(parse_text(&e.to_string()).unwrap(), e);
        let nested = CwExpr::union(CwExpr::union(CwExpr::create(0, 1), CwExpr::create(1, 2)), CwExpr::create(2, 1));
        assert_eq!(parse_text(&nested.to_string()).unwrap(), nested);
    }

    #[test]
    fn ascii_spelling() {
        assert_eq!(parse_text("eta3,2(3(3) + rho3->2(rho2->1(eta3,2(3(2) + eta2,1(2(1) + 1(0))))))").unwrap(), p4());
    }

    #[test]
    fn json_round_trip() {
        let e = p4();
        let text = to_json(&e).to_string();
        assert_eq!(parse_json(&text).unwrap(), e);
        assert_eq!(parse_any(&text).unwrap(), e);
    }

    #[test]
    fn deep_json() {
        let mut e = CwExpr::create(0, 1);
        for v in 1..400 {
            e = CwExpr::relabel(2, 1, CwExpr::join(1, 2, CwExpr::union(e, CwExpr::create(v, 2))));
        }
        assert_eq!(parse_json(&to_json(&e).to_string()).unwrap(), e);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_text("η1,1(1(0))"), Err(ExprError::Cw(CwError::JoinSameLabel(1)))));
        assert!(matches!(parse_text("0(1)"), Err(ExprError::Cw(CwError::ZeroLabel))));
        assert!(matches!(parse_text("1(0) ⊕"), Err(ExprError::Text { .. })));
        assert!(matches!(parse_text("1(0))"), Err(ExprError::Text { .. })));
        assert!(matches!(parse_json("{\"op\":\"create\",\"v\":0}"), Err(ExprError::Tree(_))));
    }
}
