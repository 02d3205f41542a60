#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperalg/growth.hpp"
#include "hyperalg/serialize.hpp"
#include "hyperalg/symbol.hpp"

namespace hyperalg {

enum class Outcome { HasAlgebra, NoAlgebra, Unknown };
enum class Confidence { Exact, Numerical };

std::string outcome_name(Outcome o);
std::string confidence_name(Confidence c);

struct EvidenceItem {
    std::string name;
    Json value;
};

struct Verdict {
    Outcome outcome = Outcome::Unknown;
    std::string route;  // "T:Ts(a)", "T:Ts(b)1", ..., "T:2", "T:ma", or "" when Unknown
    std::vector<EvidenceItem> evidence;
    Confidence confidence = Confidence::Numerical;
    Cplx rotation{1.0, 0.0};  // the symbol was divided by this unimodular phi(0)
    std::string reason;

    const EvidenceItem* find(const std::string& name) const;
};

Json verdict_to_json(const Verdict& v);

struct ZeroSetSummary {
    Cplx sum_inv{0.0, 0.0};
    Cplx sum_inv_sq{0.0, 0.0};
    double sum_inv_abs = 0.0;
    int genus_guess = 0;
    std::vector<double> r_grid;
    std::vector<std::size_t> counts;  // n(r) on r_grid
    std::size_t truncation = 0;
};

ZeroSetSummary summarize_zeros(const std::vector<Cplx>& zeros, std::size_t truncation);
Json zero_summary_to_json(const ZeroSetSummary& z);

struct NormalizedSymbol {
    SymbolSpec phi;
    Cplx rotation;  // original phi(0)
};

// Divides phi by the unimodular phi(0). Throws HypothesisError when |phi(0)| != 1 within tol.
NormalizedSymbol normalize_unimodular(const SymbolSpec& phi, double tol = 1e-9);

struct ClassifierOptions {
    int m_max = 8;
    std::vector<double> growth_grid = default_growth_grid();
    double progression_t_max = 10.0;
    int progression_magnitudes = 120;
    int progression_directions = 360;
    double second_deriv_tol = 1e-9;
    double zero_sum_tol = 1e-9;
    int tma_directions = 16;
};

struct T2Evidence {
    Cplx phi0, phi1, phi2;
    double second_deriv_margin = 0.0;
    bool margin_ok = false;
    std::vector<std::pair<int, std::optional<Cplx>>> progressions;  // (m, witness a)
    bool passes = false;
};

Json t2_evidence_to_json(const T2Evidence& e);

T2Evidence check_T2(const SymbolSpec& phi, int m_max, const ClassifierOptions& opt = {});

Verdict classify(const SymbolSpec& phi, const std::optional<ZeroSetSummary>& zeros = std::nullopt,
                 const ClassifierOptions& opt = {});

struct TIGEvidence {
    int first_nonzero_index = -1;  // min n >= 1 with phi^(n)(0) != 0, -1 when none up to the probe depth
    std::optional<bool> subexponential;
    bool a_holds = false;
    bool b_applicable = false, b_holds = false;
    bool c_applicable = false, c_holds = false;
    Cplx a1, a2, a;
    std::optional<ZeroSetSummary> zeros;
    std::string holds;  // e.g. "a", "b", "" when none

    // Eigenvalue criterion for freely generated algebras: odd first index and a ray with
    // |phi| < 1 on (0, r) and |phi(R e^{i theta})| > max(1, e^{h(theta) R}). Checked, not constructed.
    struct Ray {
        double theta, r, R;
    };
    std::optional<Ray> free_generation_ray;
    bool free_generation_holds = false;
};

Json tig_evidence_to_json(const TIGEvidence& e);

TIGEvidence check_TIG(const SymbolSpec& phi, const std::optional<ZeroSetSummary>& zeros = std::nullopt,
                      const ClassifierOptions& opt = {});

// phi(a z) with the structural data transformed in closed form.
SymbolSpec rescale_symbol(const SymbolSpec& phi, Cplx a);

}  // namespace hyperalg
