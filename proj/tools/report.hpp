#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "oafrac/construct.hpp"
#include "oafrac/effects.hpp"
#include "oafrac/strength.hpp"
#include "oafrac/verify.hpp"
#include "oafrac/wordlength.hpp"

namespace oafrac::cli {

// "mean" for the empty subset, otherwise "{1,3}".
std::string subset_label(const std::vector<int>& factors);

// "(0, 1, 2)".
std::string levels_label(const std::vector<int>& levels);

// "A = [0, 0, 1/2]" over A_1..A_k (A_0 is always 1 and not shown).
std::string gwlp_line(const GwlpVector& g);

std::string aliasing_name(Aliasing a);

// "I = AB^2C^2" style defining relation; "I" alone when nothing is aliased
// with the mean.
std::string defining_relation(const PencilClasses& classes);

void print_design(const Fraction& f, bool regular, std::ostream& out);
void print_strength(const StrengthReport& r, const Fraction& f,
                    bool per_subset, std::ostream& out);
void print_alias_report(const AliasReport& r, int factor_count,
                        std::ostream& out);
void print_pencil_classes(const PencilClasses& c, std::ostream& out);
void print_witness(const AliasWitness& w, std::ostream& out);
// Resolution, GWLP, first positive index, witness and the identity line;
// everything in a verification report except t_max.
void print_identity_summary(const VerificationReport& r, std::ostream& out);
void print_verification(const VerificationReport& r, std::ostream& out);
void print_projection(const Projection& p, std::ostream& out);

nlohmann::json design_json(const Fraction& f, bool regular);
nlohmann::json strength_json(const StrengthReport& r, const Fraction& f);
nlohmann::json gwlp_json(const GwlpVector& g);
nlohmann::json alias_report_json(const AliasReport& r);
nlohmann::json pencil_classes_json(const PencilClasses& c);
nlohmann::json witness_json(const AliasWitness& w);
nlohmann::json verification_json(const VerificationReport& r);
nlohmann::json projection_json(const Projection& p);

}  // namespace oafrac::cli
