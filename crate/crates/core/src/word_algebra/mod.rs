//! Words in the generators, the normal bases of the Hecke algebra and of its
//! even subalgebra, and exact rewriting.

mod hecke;
mod normal_form;
mod words;

pub use hecke::{hecke_f_relation_check_exact, HeckeElement, HeckeRelationCheck, HeckeRelationReport};
pub use normal_form::{
    enumerate_monomials, multiply_normal_forms, rewrite_y_word, verify_presentation_relations,
    NormalFormCombination, NormalFormMonomial, PresentationReport, RelationCheck, RewritingEngine,
};
pub use words::{
    enumerate_even_uwords, enumerate_uwords, normal_reduced_expression, Permutation, UWord, YWord,
};
