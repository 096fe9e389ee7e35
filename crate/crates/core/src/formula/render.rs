use serde_json::{json, Value};

use super::{Formula, Term};

pub fn render_term(t: &Term) -> String {
    let mut s = String::new();
    write_term(t, &mut s);
    s
}

fn write_term(t: &Term, out: &mut String) {
    match t {
        Term::Zero => out.push('0'),
        Term::One => out.push('1'),
        Term::Var(i) => {
            out.push('x');
            out.push_str(&i.to_string());
        }
        Term::Add(a, b) | Term::Mul(a, b) => {
            out.push('(');
            write_term(a, out);
            out.push_str(if matches!(t, Term::Add(..)) { " + " } else { " * " });
            write_term(b, out);
            out.push(')');
        }
    }
}

/// Canonical, fully parenthesised text; `parse(render(f)) == f`.
pub fn render(f: &Formula) -> String {
    let mut s = String::new();
    write_formula(f, &mut s);
    s
}

fn write_formula(f: &Formula, out: &mut String) {
    match f {
        Formula::Eq(a, b) | Formula::Lt(a, b) => {
            out.push('(');
            write_term(a, out);
            out.push_str(if matches!(f, Formula::Eq(..)) { " = " } else { " < " });
            write_term(b, out);
            out.push(')');
        }
        Formula::Not(g) => {
            out.push('!');
            write_formula(g, out);
        }
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
            let op = match f {
                Formula::And(..) => " & ",
                Formula::Or(..) => " | ",
                _ => " -> ",
            };
            out.push('(');
            write_formula(a, out);
            out.push_str(op);
            write_formula(b, out);
            out.push(')');
        }
        Formula::ForAll(v, g) | Formula::Exists(v, g) => {
            out.push_str(if matches!(f, Formula::ForAll(..)) { "forall x" } else { "exists x" });
            out.push_str(&v.to_string());
            out.push_str(" (");
            write_formula(g, out);
            out.push(')');
        }
    }
}

pub fn term_to_json(t: &Term) -> Value {
    match t {
        Term::Zero => json!({"kind": "Zero", "args": []}),
        Term::One => json!({"kind": "One", "args": []}),
        Term::Var(i) => json!({"kind": "Var", "args": [i]}),
        Term::Add(a, b) => json!({"kind": "Add", "args": [term_to_json(a), term_to_json(b)]}),
        Term::Mul(a, b) => json!({"kind": "Mul", "args": [term_to_json(a), term_to_json(b)]}),
    }
}

/// Tagged-union JSON export: every node is `{"kind": ..., "args": [...]}`.
pub fn to_json(f: &Formula) -> Value {
    match f {
        Formula::Eq(a, b) => json!({"kind": "Eq", "args": [term_to_json(a), term_to_json(b)]}),
        Formula::Lt(a, b) => json!({"kind": "Lt", "args": [term_to_json(a), term_to_json(b)]}),
        Formula::Not(g) => json!({"kind": "Not", "args": [to_json(g)]}),
        Formula::And(a, b) => json!({"kind": "And", "args": [to_json(a), to_json(b)]}),
        Formula::Or(a, b) => json!({"kind": "Or", "args": [to_json(a), to_json(b)]}),
        Formula::Implies(a, b) => json!({"kind": "Implies", "args": [to_json(a), to_json(b)]}),
        Formula::ForAll(v, g) => json!({"kind": "ForAll", "args": [v, to_json(g)]}),
        Formula::Exists(v, g) => json!({"kind": "Exists", "args": [v, to_json(g)]}),
    }
}
