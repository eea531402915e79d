//! Parsing of the flag values.

use chevalley::{ReductiveAlgebra, SVec, Q};
use rootsys::{AlgebraType, Colouring};

/// "A4", "A1+A1+u1", "C2+u1^3", "u1^8".
pub fn parse_algebra(s: &str) -> Result<ReductiveAlgebra, String> {
    let mut types = Vec::new();
    let mut abelian = 0;
    for term in s.split('+').map(str::trim) {
        if term == "u1" {
            abelian += 1;
        } else if let Some(n) = term.strip_prefix("u1^") {
            abelian += n.parse::<usize>().map_err(|_| format!("bad abelian term '{term}'"))?;
        } else {
            let t: AlgebraType = term.parse().map_err(|e| format!("bad algebra '{term}': {e}"))?;
            types.push(t);
        }
    }
    if types.is_empty() && abelian == 0 {
        return Err("empty algebra".into());
    }
    Ok(ReductiveAlgebra::new(&types, abelian))
}

/// One comma list of one-based nodes per simple ideal, separated by '/'.
pub fn parse_colourings(g: &ReductiveAlgebra, s: &str) -> Result<Vec<Colouring>, String> {
    let parts: Vec<&str> = s.split('/').collect();
    if parts.len() != g.ideals().len() {
        return Err(format!("--colour has {} lists, the algebra has {} simple ideals", parts.len(), g.ideals().len()));
    }
    parts
        .iter()
        .zip(g.ideals())
        .map(|(p, id)| Colouring::parse(id.roots.rank(), p).map_err(|e| format!("bad colouring '{p}': {e}")))
        .collect()
}

pub fn parse_rational(s: &str) -> Result<Q, String> {
    s.trim().parse::<Q>().map_err(|_| format!("bad rational '{s}'"))
}

pub fn parse_rationals(s: &str) -> Result<Vec<Q>, String> {
    s.split(',').map(parse_rational).collect()
}

/// Vectors separated by ';', each a comma list of coefficients over the
/// Cartan basis of `g`: the H_i of each ideal, then the abelian generators.
pub fn parse_cartan_vectors(g: &ReductiveAlgebra, s: &str) -> Result<Vec<SVec<Q>>, String> {
    let basis = g.cartan_indices();
    s.split(';')
        .map(|v| {
            let c = parse_rationals(v)?;
            if c.len() > basis.len() {
                return Err(format!("vector '{v}' has {} entries, the Cartan algebra has {}", c.len(), basis.len()));
            }
            Ok(SVec::from_pairs(basis.iter().zip(c).map(|(i, c)| (*i, c))))
        })
        .collect()
}

/// Weights over the simple roots of every ideal, concatenated.
pub fn split_per_ideal(g: &ReductiveAlgebra, w: Vec<Q>) -> Result<Vec<Vec<Q>>, String> {
    let ranks: Vec<usize> = g.ideals().iter().map(|id| id.roots.rank()).collect();
    let total: usize = ranks.iter().sum();
    if w.len() != total {
        return Err(format!("--seed-lambda has {} entries, expected {total}", w.len()));
    }
    let mut it = w.into_iter();
    Ok(ranks.iter().map(|&r| it.by_ref().take(r).collect()).collect())
}

/// Coefficients of v over the Cartan basis of g, as strings.
pub fn cartan_coords(g: &ReductiveAlgebra, v: &SVec<Q>) -> Vec<String> {
    g.cartan_indices().iter().map(|i| v.get(*i).to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_terms() {
        let g = parse_algebra("A1+A2+u1^2").unwrap();
        assert_eq!(g.ideals().len(), 2);
        assert_eq!(g.abelian_dim(), 2);
        assert_eq!(parse_algebra("u1+u1").unwrap().dim(), 2);
        assert!(parse_algebra("X3").is_err());
        assert!(parse_algebra("u1^x").is_err());
    }

    #[test]
    fn colourings_per_ideal() {
        let g = parse_algebra("A2+G2").unwrap();
        let c = parse_colourings(&g, "1/").unwrap();
        assert!(c[0].contains(0) && c[1].coloured.is_empty());
        assert!(parse_colourings(&g, "1").is_err());
        assert!(parse_colourings(&g, "3/1").is_err());
    }

    #[test]
    fn cartan_vectors() {
        let g = parse_algebra("A2+u1").unwrap();
        let v = parse_cartan_vectors(&g, "1,-1/2;0,0,3").unwrap();
        assert_eq!(cartan_coords(&g, &v[0]), vec!["1", "-1/2", "0"]);
        assert_eq!(v[1].get(g.u(0)), Q::from_integer(3));
        assert!(parse_cartan_vectors(&g, "1,2,3,4").is_err());
    }
}
