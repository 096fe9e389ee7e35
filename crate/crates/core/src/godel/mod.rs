//! Prime-power codings of sequences, sets, formulas and pairs.

mod formula_code;
mod pairing;
mod primes;
mod seq;

pub use formula_code::{
    decode_formula, decode_term, desugar, encode_formula, encode_term, symbol_text, symbols,
    term_symbol_string, NotACode, Symbol,
};
pub use pairing::{pair, pair_u64, unpair};
pub use primes::{bounded_mu, bounded_mu_big, is_prime, nth_prime, nth_prime_by_mu, nth_prime_u64, primes};
pub use seq::{
    decode_seq, decode_set, encode_seq, encode_set, is_seq, remark_product, seq_at, seq_concat,
    seq_long, SeqCode, SeqError,
};
pub(crate) use seq::contiguous_exponents;
