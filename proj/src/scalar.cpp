// Copyright 2026 The Matchkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matchkit/scalar.hpp"

#include <ostream>

namespace matchkit {

Scalar::Scalar(long num, long den) {
    if (den == 0) {
        throw Error("division by zero in rational constructor");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Scalar::Scalar(const mpq_class& v) : v_(v) {
    v_.canonicalize();
}

Scalar Scalar::parse(const std::string& text) {
    if (text.empty()) {
        throw ParseError("empty rational literal");
    }
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i) {
            if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
        }
        return true;
    };
    const auto slash = text.find('/');
    std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) {
        throw ParseError("bad rational literal: \"" + text + "\"");
    }
    mpq_class v;
    if (v.set_str(num + "/" + den, 10) != 0) {
        throw ParseError("bad rational literal: \"" + text + "\"");
    }
    if (sgn(v.get_den()) == 0) {
        throw ParseError("zero denominator in \"" + text + "\"");
    }
    v.canonicalize();
    return Scalar(v);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) {
        throw Error("division by zero");
    }
    return Scalar(mpq_class(v_ / o.v_));
}

Scalar Scalar::inverse() const {
    if (is_zero()) {
        throw Error("inverse of zero");
    }
    return Scalar(mpq_class(1 / v_));
}

std::string Scalar::str() const {
    if (v_.get_den() == 1) {
        return v_.get_num().get_str();
    }
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
}

}  // namespace matchkit
