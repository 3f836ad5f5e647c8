// SPDX-License-Identifier: Apache-2.0

#include "triad/vertexdb.hpp"

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

namespace triad {

std::optional<int> VertexDb::lookup(const Point& p) const
{
    const auto it = index_.find(p);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

EnsureResult VertexDb::ensure(const Point& p, const Evaluator& ev, int iteration)
{
    if (const auto existing = lookup(p)) {
        ++hits_;
        return {*existing, true};
    }
    if (!ev.fn) {
        throw EvalError("evaluator has no function attached");
    }
    std::vector<double> values = ev.fn(p.to_doubles());
    if (static_cast<int>(values.size()) != ev.arity) {
        throw EvalError("evaluator returned " + std::to_string(values.size()) +
                        " components, expected " + std::to_string(ev.arity));
    }
    for (const double v : values) {
        if (!std::isfinite(v)) {
            throw EvalError("evaluator returned a non-finite component");
        }
    }
    const int id = static_cast<int>(records_.size()) + 1;
    records_.push_back(VertexRecord{id, p, std::move(values), iteration});
    index_.emplace(p, id);
    return {id, false};
}

const std::vector<double>& VertexDb::value(int id) const
{
    return record(id).values;
}

const VertexRecord& VertexDb::record(int id) const
{
    if (id < 1 || id > static_cast<int>(records_.size())) {
        throw LookupError("unknown vertex id " + std::to_string(id));
    }
    return records_[static_cast<std::size_t>(id) - 1];
}

void VertexDb::dump(std::ostream& out) const
{
    for (const VertexRecord& r : records_) {
        nlohmann::ordered_json line;
        line["id"] = r.id;
        nlohmann::ordered_json point = nlohmann::ordered_json::array();
        for (const Rational& c : r.point.coords) {
            point.push_back(c.str());
        }
        line["point"] = std::move(point);
        line["values"] = r.values;
        line["eval_iteration"] = r.eval_iteration;
        out << line.dump() << '\n';
    }
}

} // namespace triad
