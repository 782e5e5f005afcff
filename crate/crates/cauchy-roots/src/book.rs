//! Runs every fenced Rust block in the book (and the README) as a doctest,
//! so `cargo test --doc` keeps the documentation in sync with the code.
//! Compiled only under `rustdoc --test`.

macro_rules! book_chapter {
    ($name:ident, $path:literal) => {
        #[doc = include_str!($path)]
        pub struct $name;
    };
}

book_chapter!(Readme, "../../../README.md");
book_chapter!(Introduction, "../../../book/src/introduction.md");
book_chapter!(ExactArithmetic, "../../../book/src/exact-arithmetic.md");
book_chapter!(Polynomials, "../../../book/src/polynomials.md");
book_chapter!(SignVariations, "../../../book/src/sign-variations.md");
book_chapter!(CauchyIndices, "../../../book/src/cauchy-indices.md");
book_chapter!(WindingNumbers, "../../../book/src/winding-numbers.md");
book_chapter!(RootCounting, "../../../book/src/root-counting.md");
book_chapter!(Isolation, "../../../book/src/isolation.md");
book_chapter!(NumericOracles, "../../../book/src/numeric-oracles.md");
