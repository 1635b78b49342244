use super::Formula;

// Binding strength, loosest first; mirrors the parser.
const IMPLIES: u8 = 1;
const UNTIL: u8 = 2;
const UNARY: u8 = 3;
const ATOM: u8 = 4;

fn strength(f: &Formula) -> u8 {
    match f {
        Formula::Var(_) | Formula::Bottom => ATOM,
        Formula::Next(_) => UNARY,
        Formula::WeakUntil(..) => UNTIL,
        Formula::Implies(..) => IMPLIES,
    }
}

pub(super) fn render(f: &Formula) -> String {
    let mut out = String::new();
    write(f, &mut out);
    out
}

fn write_at(f: &Formula, min: u8, out: &mut String) {
    if strength(f) < min {
        out.push('(');
        write(f, out);
        out.push(')');
    } else {
        write(f, out);
    }
}

fn write(f: &Formula, out: &mut String) {
    match f {
        Formula::Var(name) => out.push_str(name),
        Formula::Bottom => out.push_str("false"),
        Formula::Next(body) => {
            out.push_str("X ");
            write_at(body, UNARY, out);
        }
        // right-associative: only the left operand needs the stricter bound
        Formula::WeakUntil(lhs, rhs) => {
            write_at(lhs, UNARY, out);
            out.push_str(" W ");
            write_at(rhs, UNTIL, out);
        }
        Formula::Implies(lhs, rhs) => {
            write_at(lhs, UNTIL, out);
            out.push_str(" -> ");
            write_at(rhs, IMPLIES, out);
        }
    }
}
