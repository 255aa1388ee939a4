//! Canonical text rendering of ordinals, inverse to the parser.

use ordcalc_core::{Monomial, Ordinal};

/// Render the Cantor normal form: monomials joined by ` + `, coefficient 1
/// elided, exponents 0 and 1 elided, `w^Omega_k` collapsed to the atom
/// token. Exponents render compactly (no spaces), so e.g. the value
/// `Omega_1 * (w+1)` prints as `w^(w1+1) + w1`.
/// `parse_ordinal(print_ordinal(a)) == a` for every ordinal.
pub fn print_ordinal(a: &Ordinal) -> String {
    render(a, false)
}

fn render(a: &Ordinal, compact: bool) -> String {
    match a {
        Ordinal::Zero => "0".to_string(),
        Ordinal::Atom(k) => format!("w{k}"),
        Ordinal::Cnf(ms) => {
            let sep = if compact { "+" } else { " + " };
            ms.iter().map(render_monomial).collect::<Vec<_>>().join(sep)
        }
    }
}

fn render_monomial(m: &Monomial) -> String {
    let base = match &m.exponent {
        Ordinal::Zero => return m.coefficient.to_string(),
        Ordinal::Atom(k) => format!("w{k}"),
        e if *e == Ordinal::one() => "w".to_string(),
        e => {
            let inner = render(e, true);
            // a single token or a '^' chain binds fine under '^';
            // anything with an infix operator needs parentheses
            if inner.contains('+') || inner.contains('*') {
                format!("w^({inner})")
            } else {
                format!("w^{inner}")
            }
        }
    };
    if m.coefficient == 1u32.into() {
        base
    } else {
        format!("{base}*{}", m.coefficient)
    }
}
