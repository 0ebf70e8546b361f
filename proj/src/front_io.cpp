#include "pagecross/front_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace pagecross {

namespace {

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> out;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string piece;
        std::istringstream parts(line);
        std::string chunk;
        while (std::getline(parts, chunk, ';')) {
            // keep full chunk; directives carry spaces
            size_t b = chunk.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            size_t e = chunk.find_last_not_of(" \t\r");
            out.push_back(chunk.substr(b, e - b + 1));
        }
    }
    return out;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(Err::BadFormat, "expected integer for " + what + ", got '" + s + "'");
    }
}

} // namespace

FrontDiagram parse_front(const std::string& text) {
    FrontDiagram d;
    struct Orient { int comp; int flag; };
    std::vector<Orient> orients;

    for (const std::string& tok : tokenize(text)) {
        if (tok.rfind("orient", 0) == 0) {
            std::istringstream ss(tok);
            std::string kw, comp, flag;
            ss >> kw >> comp >> flag;
            if (comp.empty() || (flag != "+" && flag != "-"))
                throw Error(Err::BadFormat, "orient directive: '" + tok + "'");
            orients.push_back({parse_int(comp, "component"), flag == "+" ? +1 : -1});
            continue;
        }
        if (tok.rfind("strands", 0) == 0) {
            std::istringstream ss(tok);
            std::string kw, count;
            ss >> kw >> count;
            d.strands_in = parse_int(count, "strand count");
            d.open = true;
            continue;
        }
        if (tok == "open") {
            d.open = true;
            continue;
        }
        if (tok.size() < 2)
            throw Error(Err::BadFormat, "unrecognized token '" + tok + "'");
        const int pos = parse_int(tok.substr(1), "event position");
        switch (tok[0]) {
        case 'O': d.events.push_back(cusp_open(pos)); break;
        case 'C': d.events.push_back(cusp_close(pos)); break;
        case 'X': d.events.push_back(cross(pos)); break;
        default: throw Error(Err::BadFormat, "unrecognized token '" + tok + "'");
        }
    }

    FrontAnalysis a = analyze(d); // validates invariants
    d.orientations.assign(a.components.size(), +1);
    for (const auto& o : orients) {
        if (o.comp < 0 || static_cast<size_t>(o.comp) >= d.orientations.size())
            throw Error(Err::DanglingComponent, "orient refers to unknown component " + std::to_string(o.comp));
        d.orientations[o.comp] = o.flag;
    }
    return d;
}

std::string serialize_front(const FrontDiagram& d) {
    std::ostringstream out;
    if (d.open) {
        if (d.strands_in > 0) out << "strands " << d.strands_in << "\n";
        else out << "open\n";
    }
    for (const FrontEvent& e : d.events) {
        switch (e.kind) {
        case EventKind::CuspOpen: out << 'O'; break;
        case EventKind::CuspClose: out << 'C'; break;
        case EventKind::Cross: out << 'X'; break;
        }
        out << e.pos << "\n";
    }
    for (size_t i = 0; i < d.orientations.size(); ++i)
        if (d.orientations[i]) out << "orient " << i << ' ' << (*d.orientations[i] > 0 ? '+' : '-') << "\n";
    return out.str();
}

} // namespace pagecross
