//! Hand-built μ-free definitions. Unary functions recursing on their own
//! argument use a two-argument helper `h(d, y)` with a dummy `d`, applied as
//! `h(x, x)`, since a base case of arity 0 is not expressible.

use super::def::{PRDef, PrError};

pub const STDLIB_NAMES: [&str; 10] = [
    "add", "mul", "pred", "sub_trunc", "max", "min", "factorial", "is_prime", "nth_prime", "pair",
];

pub fn stdlib(name: &str) -> Result<PRDef, PrError> {
    Ok(match name {
        "add" => add(),
        "mul" => mul(),
        "pred" => pred(),
        "sub_trunc" => sub_trunc(),
        "max" => max(),
        "min" => min(),
        "factorial" => factorial(),
        "is_prime" => is_prime(),
        "nth_prime" => nth_prime(),
        "pair" => pair(),
        _ => return Err(PrError::UnknownName(name.to_string())),
    })
}

fn p(i: usize, n: usize) -> PRDef {
    PRDef::proj(i, n)
}

fn c(f: PRDef, gs: Vec<PRDef>) -> PRDef {
    PRDef::comp(f, gs)
}

fn succ_of(g: PRDef) -> PRDef {
    c(PRDef::Succ, vec![g])
}

/// Constant function of arity 1.
fn const1(v: u32) -> PRDef {
    (0..v).fold(PRDef::ZeroFn, |acc, _| succ_of(acc))
}

/// Arity-`n` constant `v`.
fn constant(v: u32, n: usize) -> PRDef {
    c(const1(v), vec![p(1, n)])
}

/// `h(x) = helper(x, x)` for a binary `helper`.
fn diagonal(helper: PRDef) -> PRDef {
    c(helper, vec![p(1, 1), p(1, 1)])
}

fn add() -> PRDef {
    PRDef::primrec(p(1, 1), succ_of(p(3, 3)))
}

fn mul() -> PRDef {
    // x * 0 = 0, x * (y + 1) = x * y + x
    PRDef::primrec(PRDef::ZeroFn, c(add(), vec![p(3, 3), p(1, 3)]))
}

fn pred() -> PRDef {
    diagonal(PRDef::primrec(PRDef::ZeroFn, p(2, 3)))
}

fn sub_trunc() -> PRDef {
    PRDef::primrec(p(1, 1), c(pred(), vec![p(3, 3)]))
}

fn max() -> PRDef {
    c(add(), vec![p(1, 2), c(sub_trunc(), vec![p(2, 2), p(1, 2)])])
}

fn min() -> PRDef {
    c(sub_trunc(), vec![p(1, 2), c(sub_trunc(), vec![p(1, 2), p(2, 2)])])
}

fn factorial() -> PRDef {
    // 0! = 1, (y + 1)! = y! * (y + 1)
    diagonal(PRDef::primrec(
        const1(1),
        c(mul(), vec![p(3, 3), succ_of(p(2, 3))]),
    ))
}

/// `sg(x) = 0` if `x = 0`, else 1.
fn sg() -> PRDef {
    diagonal(PRDef::primrec(PRDef::ZeroFn, constant(1, 3)))
}

/// `1 - sg(x)`.
fn nsg() -> PRDef {
    diagonal(PRDef::primrec(const1(1), constant(0, 3)))
}

/// `|x - y|`.
fn abs_diff() -> PRDef {
    c(
        add(),
        vec![
            c(sub_trunc(), vec![p(1, 2), p(2, 2)]),
            c(sub_trunc(), vec![p(2, 2), p(1, 2)]),
        ],
    )
}

/// `rem(d, x) = x mod d` (and `x` when `d = 0`), by recursion on `x`.
fn rem() -> PRDef {
    let next = succ_of(p(3, 3));
    let wraps = c(sg(), vec![c(abs_diff(), vec![next.clone(), p(1, 3)])]);
    PRDef::primrec(PRDef::ZeroFn, c(mul(), vec![next, wraps]))
}

/// `divides(d, x) = 1` iff `d | x`.
fn divides() -> PRDef {
    c(nsg(), vec![rem()])
}

/// Least divisor `>= 2` of `x`, or `x` when there is none below `x` (`x >= 2`).
fn least_divisor() -> PRDef {
    // g(x, y) = 0 iff (y + 2) | x
    let y_plus_2 = succ_of(succ_of(p(2, 2)));
    let g = c(nsg(), vec![c(divides(), vec![y_plus_2, p(1, 2)])]);
    let bound = c(sub_trunc(), vec![p(1, 1), constant(2, 1)]);
    let found = c(PRDef::bounded_mu(g), vec![p(1, 1), bound]);
    succ_of(succ_of(found))
}

fn is_prime() -> PRDef {
    let at_least_2 = c(sg(), vec![c(pred(), vec![p(1, 1)])]);
    let eq = c(nsg(), vec![abs_diff()]);
    let irreducible = c(eq, vec![least_divisor(), p(1, 1)]);
    c(mul(), vec![at_least_2, irreducible])
}

/// Least prime above `p`. The bound `p + 1` is enough by Bertrand's postulate.
fn next_prime() -> PRDef {
    // g(p, y) = 0 iff p + 1 + y is prime
    let candidate = succ_of(c(add(), vec![p(1, 2), p(2, 2)]));
    let g = c(nsg(), vec![c(is_prime(), vec![candidate])]);
    let offset = c(PRDef::bounded_mu(g), vec![p(1, 1), succ_of(p(1, 1))]);
    succ_of(c(add(), vec![p(1, 1), offset]))
}

fn nth_prime() -> PRDef {
    diagonal(PRDef::primrec(const1(2), c(next_prime(), vec![p(3, 3)])))
}

fn pair() -> PRDef {
    // T(0) = 0, T(s + 1) = T(s) + s + 1
    let triangle = diagonal(PRDef::primrec(
        PRDef::ZeroFn,
        c(add(), vec![p(3, 3), succ_of(p(2, 3))]),
    ));
    c(add(), vec![c(triangle, vec![add()]), p(2, 2)])
}
