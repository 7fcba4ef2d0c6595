#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "tlrep/catalog.hpp"
#include "tlrep/homology.hpp"
#include "tlrep/quiver.hpp"

namespace tlrep {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

struct SpecTerm {
    int mult = 1;
    AliasSpec alias;
    bool operator==(const SpecTerm&) const = default;
};

// unnormalized parse result; a single term with mult 1 is a plain alias
using ParsedSpec = std::vector<SpecTerm>;

ParsedSpec parse_module_spec(const std::string& text);
ModuleSum to_module_sum(const AlgebraCtx& ctx, const ParsedSpec& spec);
ModuleSum parse_module(const AlgebraCtx& ctx, const std::string& text);

std::string alias_string(const AliasSpec& a);
// terms sorted by letter, then k, then l; "0" for the zero module
std::string to_string(const ModuleSum& s);
std::string to_string(const Factors& f);

std::string ctx_json(const AlgebraCtx& ctx);
std::string sum_json(const ModuleSum& s);
std::string quiver_json(const ARQuiver& q, bool show_tau = true);
std::string quiver_dot(const ARQuiver& q, bool show_tau = false);

}  // namespace tlrep
