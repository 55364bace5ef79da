#include "cli/report.hpp"

#include <iomanip>
#include <sstream>

namespace cli {

using exactmath::Scalar;

std::string to_string(Status s)
{
    switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::inconclusive: return "INCONCLUSIVE";
    case Status::info: return "INFO";
    }
    return "INFO";
}

void Report::verdict(const std::string& check, Status status, const std::string& witness)
{
    verdicts.push_back({check, status, witness});
    std::string line = "[" + to_string(status) + "] " + check;
    if (!witness.empty())
        line += ": " + witness;
    lines.push_back(line);
}

bool Report::failed() const
{
    for (const auto& v : verdicts)
        if (v.status == Status::fail)
            return true;
    return false;
}

json Report::to_json() const
{
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    json vs = json::array();
    for (const auto& v : verdicts)
        vs.push_back({{"check", v.check}, {"status", to_string(v.status)}, {"witness", v.witness}});
    j["verdicts"] = vs;
    j["timing_seconds"] = seconds;
    j["exit_code"] = exit_code();
    return j;
}

std::string Report::to_text() const
{
    std::ostringstream os;
    os << command << "\n";
    for (const auto& l : lines)
        os << "  " << l << "\n";
    os << std::fixed << std::setprecision(3) << "  time " << seconds << " s\n";
    return os.str();
}

std::string rational_json(const exactmath::Rational& q)
{
    exactmath::Rational c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

json field_json(const exactmath::FieldPtr& K)
{
    json tower = json::array();
    for (auto f = K; f; f = f->base())
        tower.push_back(f->name() + ": " + f->modulus_str() + " = 0");
    return tower;
}

json scalar_json(const Scalar& a)
{
    if (a.is_rational())
        return rational_json(a.rational());
    return {{"expr", a.str()}, {"field", field_json(a.field())}};
}

json error_json(const std::string& command, const json& inputs, const std::string& kind, const std::string& message,
                int exit_code)
{
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = json::object();
    j["verdicts"] = json::array();
    j["timing_seconds"] = 0.0;
    j["exit_code"] = exit_code;
    j["error"] = {{"kind", kind}, {"message", message}};
    return j;
}

} // namespace cli
