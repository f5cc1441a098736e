#include "acatlab/caps.hpp"

#include <sstream>

#include "acatlab/error.hpp"

namespace acatlab {

Caps parse_caps(const std::string& text, Caps base) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) fail(ErrorKind::Input, "cap override '" + item + "' is not key=value");
        auto key = item.substr(0, eq);
        unsigned long long value = 0;
        try {
            std::size_t used = 0;
            value = std::stoull(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            fail(ErrorKind::Input, "cap override '" + item + "' has a non-numeric value");
        }
        if (value == 0) fail(ErrorKind::Input, "cap '" + key + "' must be positive");
        if (key == "order") base.order = value;
        else if (key == "faces") base.faces = value;
        else if (key == "homology") base.homology_faces = value;
        else if (key == "oracle") base.oracle_order = value;
        else if (key == "dims") base.extra_dims = static_cast<int>(value);
        else if (key == "assoc") base.assoc_full = value;
        else fail(ErrorKind::Input, "unknown cap '" + key + "'");
    }
    return base;
}

}  // namespace acatlab
