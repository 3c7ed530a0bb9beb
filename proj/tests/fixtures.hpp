#pragma once

#include <string>

namespace noderank::fixture {

// Five-row node metadata table in the GNID column layout.
inline const std::string kTableOne =
    "Node ID,Network Type,Node Type,Connections,k-Shell Index,Self-Influence Score,Global Influence Score\n"
    "N017,Social Media,Organization,120,18,0.88,1.1\n"
    "N043,Transportation,Hub,8,12,0.65,0.82\n"
    "N021,Communication,Relay,30,11,0.62,0.79\n"
    "N056,Social Media,Individual,200,22,0.98,1.25\n"
    "N034,Transportation,Junction,4,9,0.5,0.68\n";

}  // namespace noderank::fixture
