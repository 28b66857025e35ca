//! Deterministic text rendering of monomials and Laurent monomials.

/// Renders an exponent vector over the given variable names, e.g. `x^2*y` or
/// `y*x^-1`. Negative exponents are allowed; the zero vector renders as `1`.
pub fn monomial_string(names: &[String], exponents: &[i64]) -> String {
    assert_eq!(names.len(), exponents.len());
    let factors: Vec<String> = names
        .iter()
        .zip(exponents)
        .filter(|(_, &e)| e != 0)
        .map(|(n, &e)| {
            if e == 1 {
                n.clone()
            } else {
                format!("{n}^{e}")
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// Renders an integer vector as `(a, b, c)`.
pub fn vector_string(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomials() {
        let names = vec!["x".to_string(), "y".to_string(), "z".to_string()];
        assert_eq!(monomial_string(&names, &[1, 1, 0]), "x*y");
        assert_eq!(monomial_string(&names, &[2, 0, -1]), "x^2*z^-1");
        assert_eq!(monomial_string(&names, &[0, 0, 0]), "1");
    }

    #[test]
    fn vectors() {
        assert_eq!(vector_string(&[1, -1]), "(1, -1)");
        assert_eq!(vector_string(&[]), "()");
    }
}
