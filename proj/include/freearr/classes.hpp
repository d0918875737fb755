#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "freearr/arrangement.hpp"

namespace freearr {

using Json = nlohmann::json;

enum class Membership { Member, NonMember, Undecided };
std::string to_string(Membership m);

// Exponent bookkeeping of one addition step: given the exponent multisets of
// the deleted arrangement (length l, zeros of the center included) and of the
// restriction (length l-1), returns the exponents of the full arrangement
// when the multisets are compatible, nullopt otherwise.
std::optional<std::vector<long>> addition_step(const std::vector<long>& exp_deleted,
                                               const std::vector<long>& exp_restricted);

// One line per addition: "exp-before | normal | exp-restriction", then a
// terminal "final ..." line; '#' comments; "dim l" header.
struct InductionTable {
    int dim = 0;
    struct Step {
        std::vector<long> exp_before;
        IntVec normal;
        std::vector<long> exp_restriction;
    };
    std::vector<Step> steps;
    std::vector<long> final_exponents;
};
InductionTable parse_induction_table(const std::string& text);
std::string emit_induction_table(const InductionTable& t);

struct StepReport {
    int index = -1;
    bool ok = false;
    std::string reason;
};
struct TableCheck {
    bool ok = false;
    std::vector<StepReport> steps;
    std::vector<long> final_exponents;
};

// Recomputes every step of the table against `a`: restriction exponents via
// chi, inductive freeness of each restriction, and the addition-step
// arithmetic linking consecutive lines.
TableCheck verify_induction_table(const Arrangement& a, const InductionTable& t,
                                  long long budget = 0);

// Same verification driven by a bare addition order (the table columns are
// recomputed instead of checked against claimed values).
TableCheck verify_inductive_chain(const Arrangement& a, const std::vector<IntVec>& chain,
                                  long long budget = 0);

struct ChainCheck {
    bool ok = false;
    int failed_prefix = -1;  // 1-based size of the offending prefix
    std::string reason;
    std::vector<std::vector<long>> prefix_exponents;
};
// Checks that the chain orders exactly the hyperplanes of `a` and that every
// prefix is free (each prefix decided independently by the freeness oracle).
ChainCheck verify_free_chain(const Arrangement& a, const std::vector<IntVec>& chain);

// Replays a divisional flag: successive hyperplane restrictions, chi
// dividing at each step, down to rank <= 2.  Each normal is written in the
// coordinates of the arrangement it restricts.
struct FlagCheck {
    bool ok = false;
    std::string reason;
};
FlagCheck verify_divisional_flag(const Arrangement& a, const std::vector<IntVec>& flag);

// Replays a stair certificate: a sequence of steps, each either
// {"op":"add","normal":[...]} (addition theorem with free restriction) or
// {"op":"divide","normal":[...]} (chi division, descend into the restriction).
FlagCheck verify_stair_steps(const Arrangement& a, const Json& steps);

struct ClassVerdict {
    Membership membership = Membership::Undecided;
    std::vector<long> exponents;  // chi roots when they split
    Json certificate;             // set when Member
    Json trace;                   // refutation or budget record otherwise
};

// Node budget for the recursive deciders; 0 picks the default, which the
// FREEARR_BUDGET environment variable overrides.
long long default_budget();

ClassVerdict is_inductively_free(const Arrangement& a, long long budget = 0);
ClassVerdict is_additionally_free(const Arrangement& a, long long budget = 0);
ClassVerdict is_divisionally_free(const Arrangement& a, long long budget = 0);
ClassVerdict is_stair_free(const Arrangement& a, long long budget = 0);
// klass in {"if", "af", "df", "sf"}.
ClassVerdict classify(const Arrangement& a, const std::string& klass, long long budget = 0);
void clear_class_caches();

// Independent audit of a NonMember trace: recomputes every chi multiset and
// nested verdict recorded in the trace.
FlagCheck replay_refutation(const Arrangement& a, const Json& trace);

}  // namespace freearr
