#include "veer/theta.hpp"

#include "veer/dehornoy.hpp"
#include "veer/shorten.hpp"

namespace veer {

std::optional<int> model_parameter(const BraidWord& w)
{
    const int m = w.strands();
    if (m < 3) return std::nullopt;
    const int top = 2 * (m - 1) - exponent_sum(w);
    if (top <= 0 || top % (m - 2) != 0) return std::nullopt;
    const int k = top / (m - 2);
    if (permutation(w) != permutation(model_braid(k, m))) return std::nullopt;
    if (!equals(w, model_braid(k, m))) return std::nullopt;
    return k;
}

BraidTheta theta_of_braid(const BraidWord& w, const ThetaOptions& opt)
{
    BraidTheta out;
    out.word = free_reduce(w);
    out.conjugator = BraidWord(w.strands());
    if (opt.recognize_model) {
        if (const auto k = model_parameter(out.word)) {
            out.helix = true;
            out.word = model_braid(*k, w.strands());
            out.grid = helix_grid(*k, w.strands());
            out.result = theta_nonvanishing(out.grid, opt.limits);
            if (out.result.status == NonvanishingResult::Status::Nonzero) return out;
            out.helix = false;
            out.word = free_reduce(w);
        }
    }
    if (opt.shorten) {
        const Shortened s = shorten_conjugate(out.word, opt.shorten_expansions);
        // Conjugates close up to the same transverse link, so an incoming-free theta on any
        // of their grids settles the question without the solver.
        if (opt.limits.fast_path) {
            for (const ConjugateWord& c : s.explored) {
                for (GridLayout layout : {GridLayout::Compact, GridLayout::Standard}) {
                    const GridDiagram g = braid_to_grid(c.word, layout);
                    if (has_incoming_rectangle(g, theta_state(g))) continue;
                    out.word = c.word;
                    out.conjugator = c.conjugator;
                    out.grid = g;
                    out.result = theta_nonvanishing(g, opt.limits);
                    return out;
                }
            }
        }
        out.word = s.word;
        out.conjugator = s.conjugator;
    }
    out.grid = braid_to_grid(out.word, GridLayout::Compact);
    out.result = theta_nonvanishing(out.grid, opt.limits);
    return out;
}

}  // namespace veer
