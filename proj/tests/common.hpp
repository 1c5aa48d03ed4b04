#pragma once

#include "canbdi/harness.hpp"
#include "canbdi/verify.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace testutil {

inline std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string model_path(const std::string& rel) { return std::string(CANBDI_SOURCE_DIR) + "/models/" + rel; }

inline canbdi::AgentConfig agent_text(const std::string& text)
{
    auto pr = canbdi::parse_agent(text);
    if (!pr.ok()) {
        std::string msg;
        for (auto& d : pr.diags)
            msg += d.str("<text>") + "\n";
        throw std::runtime_error(msg);
    }
    return *pr.config;
}

inline canbdi::AgentConfig model(const std::string& name) { return agent_text(slurp(model_path(name + ".can"))); }

inline bool has_error(const std::vector<canbdi::Diagnostic>& ds)
{
    for (auto& d : ds)
        if (d.severity == canbdi::Diagnostic::Severity::Error)
            return true;
    return false;
}

} // namespace testutil
