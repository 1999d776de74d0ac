"""Hand-curated English word bank.

Single source of truth for the word-list assets shipped with the package
(tagger lexicon, exclusion list, category lexicon) and for the corpus
generators used by the asset-build scripts and the test suite.
"""

# Nouns grouped by semantic category. A word may appear in several category
# drafts below; the asset builder assigns each word to its first category.
CATEGORY_NOUNS = {
    "animal": [
        "dog", "cat", "horse", "pony", "cow", "bull", "calf", "sheep", "lamb",
        "goat", "pig", "hog", "boar", "rabbit", "hare", "mouse", "rat", "fox",
        "wolf", "bear", "cub", "deer", "fawn", "elk", "moose", "lion", "tiger",
        "leopard", "cheetah", "jaguar", "elephant", "giraffe", "zebra", "camel",
        "donkey", "mule", "monkey", "ape", "gorilla", "chimpanzee", "baboon",
        "lemur", "squirrel", "chipmunk", "beaver", "otter", "badger", "skunk",
        "raccoon", "hedgehog", "bat", "whale", "dolphin", "seal", "walrus",
        "frog", "toad", "turtle", "tortoise", "lizard", "gecko", "iguana",
        "snake", "python", "cobra", "viper", "crocodile", "alligator",
        "hamster", "gerbil", "ferret", "mole", "shrew", "porcupine",
        "armadillo", "sloth", "koala", "kangaroo", "wallaby", "platypus",
        "opossum", "weasel", "mink", "lynx", "bobcat", "cougar", "panther",
        "hyena", "jackal", "antelope", "gazelle", "bison", "buffalo", "ox",
        "yak", "llama", "alpaca", "reindeer", "mustang", "stallion", "mare",
        "colt", "kitten", "puppy",
    ],
    "bird": [
        "chicken", "rooster", "hen", "chick", "duck", "duckling", "goose",
        "swan", "turkey", "pigeon", "dove", "sparrow", "robin", "crow",
        "raven", "magpie", "jay", "cardinal", "finch", "canary", "parrot",
        "parakeet", "cockatoo", "macaw", "owl", "hawk", "eagle", "falcon",
        "vulture", "condor", "stork", "heron", "crane", "flamingo", "pelican",
        "seagull", "gull", "albatross", "penguin", "ostrich", "emu", "peacock",
        "pheasant", "quail", "partridge", "woodpecker", "hummingbird",
        "kingfisher", "swallow", "swift", "starling", "wren", "warbler",
        "lark", "nightingale", "toucan", "puffin",
    ],
    "sea_creature": [
        "salmon", "trout", "tuna", "cod", "herring", "sardine", "anchovy",
        "mackerel", "bass", "perch", "pike", "carp", "catfish", "eel",
        "shark", "ray", "stingray", "swordfish", "marlin", "halibut",
        "flounder", "snapper", "grouper", "tilapia", "minnow", "goldfish",
        "octopus", "squid", "lobster", "crab", "shrimp", "prawn", "oyster",
        "clam", "mussel", "scallop", "jellyfish", "starfish", "urchin",
        "barnacle", "krill", "seahorse", "manatee",
    ],
    "insect": [
        "ant", "bee", "wasp", "hornet", "beetle", "butterfly", "moth",
        "caterpillar", "dragonfly", "grasshopper", "cricket", "locust",
        "mantis", "cockroach", "termite", "fly", "mosquito", "gnat", "flea",
        "tick", "spider", "scorpion", "centipede", "millipede", "snail",
        "slug", "worm", "ladybug", "firefly", "cicada", "aphid", "earwig",
    ],
    "vehicle": [
        "car", "truck", "bus", "van", "taxi", "cab", "jeep", "tractor",
        "trailer", "motorcycle", "scooter", "moped", "bicycle", "tricycle",
        "unicycle", "train", "tram", "subway", "locomotive", "wagon",
        "carriage", "chariot", "cart", "sled", "sleigh", "boat", "ship",
        "ferry", "yacht", "canoe", "kayak", "raft", "barge", "tanker",
        "submarine", "airplane", "jet", "helicopter", "glider", "blimp",
        "rocket", "shuttle", "ambulance", "bulldozer", "excavator",
        "forklift", "snowmobile", "limousine", "convertible", "sedan",
        "hatchback", "pickup", "gondola", "trolley", "rickshaw",
    ],
    "food": [
        "bread", "toast", "bagel", "croissant", "muffin", "cake", "pie",
        "cookie", "biscuit", "brownie", "donut", "pudding", "custard",
        "pasta", "noodle", "spaghetti", "macaroni", "pizza", "burger",
        "sandwich", "hotdog", "taco", "burrito", "soup", "stew", "salad",
        "rice", "curry", "omelet", "pancake", "waffle", "cereal", "oatmeal",
        "porridge", "cheese", "butter", "yogurt", "cream", "chocolate",
        "candy", "caramel", "honey", "jam", "jelly", "sauce", "gravy",
        "mustard", "ketchup", "salt", "sugar", "flour", "dough", "steak",
        "bacon", "sausage", "ham", "meatball", "fries", "chips", "popcorn",
        "pretzel", "cracker", "tofu", "sushi", "dumpling", "pastry", "fudge",
        "toffee", "nougat", "syrup",
    ],
    "fruit": [
        "apple", "banana", "orange", "lemon", "lime", "grapefruit", "peach",
        "pear", "plum", "apricot", "cherry", "strawberry", "raspberry",
        "blueberry", "blackberry", "cranberry", "grape", "melon",
        "watermelon", "cantaloupe", "mango", "papaya", "pineapple", "kiwi",
        "coconut", "fig", "date", "olive", "pomegranate", "nectarine",
        "tangerine", "guava", "lychee", "avocado", "raisin", "prune",
    ],
    "vegetable": [
        "potato", "carrot", "onion", "garlic", "tomato", "cucumber",
        "lettuce", "spinach", "kale", "cabbage", "broccoli", "cauliflower",
        "celery", "asparagus", "pea", "bean", "lentil", "corn", "pumpkin",
        "squash", "zucchini", "eggplant", "radish", "turnip", "beet",
        "parsnip", "leek", "mushroom", "pepper", "artichoke", "okra", "yam",
        "chickpea", "shallot", "scallion",
    ],
    "drink": [
        "water", "milk", "juice", "coffee", "tea", "cocoa", "soda",
        "lemonade", "cider", "beer", "ale", "wine", "whiskey", "vodka",
        "rum", "brandy", "champagne", "smoothie", "milkshake", "espresso",
        "latte", "cappuccino", "punch", "nectar",
    ],
    "clothing": [
        "shirt", "blouse", "sweater", "cardigan", "jacket", "coat", "parka",
        "vest", "suit", "tuxedo", "dress", "skirt", "pants", "jeans",
        "trousers", "shorts", "leggings", "sock", "stocking", "shoe", "boot",
        "sneaker", "sandal", "slipper", "heel", "hat", "cap", "beanie",
        "helmet", "scarf", "glove", "mitten", "belt", "tie", "bowtie",
        "pajamas", "robe", "gown", "uniform", "apron", "bikini", "swimsuit",
        "hoodie", "poncho", "kimono", "overalls", "cloak", "veil", "turban",
        "sash",
    ],
    "furniture": [
        "chair", "armchair", "sofa", "couch", "bench", "stool", "table",
        "desk", "dresser", "wardrobe", "closet", "cabinet", "cupboard",
        "shelf", "bookcase", "bed", "crib", "mattress", "nightstand",
        "ottoman", "recliner", "hammock", "futon", "vanity", "sideboard",
        "bookshelf", "headboard", "cot",
    ],
    "building": [
        "house", "cottage", "cabin", "mansion", "castle", "palace", "tower",
        "skyscraper", "apartment", "condo", "barn", "shed", "garage",
        "warehouse", "factory", "mill", "church", "temple", "mosque",
        "cathedral", "chapel", "school", "university", "library", "museum",
        "theater", "cinema", "stadium", "arena", "gym", "hospital", "clinic",
        "pharmacy", "hotel", "motel", "inn", "restaurant", "cafe", "bakery",
        "market", "mall", "store", "bridge", "tunnel", "lighthouse",
        "windmill", "fountain", "monument", "station", "airport", "harbor",
        "pier", "dock", "pagoda", "silo", "hut", "igloo", "bunker",
    ],
    "tool": [
        "hammer", "screwdriver", "wrench", "pliers", "drill", "saw",
        "chisel", "axe", "hatchet", "shovel", "spade", "rake", "hoe",
        "trowel", "crowbar", "clamp", "vise", "ruler", "ladder", "brush",
        "roller", "scraper", "sander", "grinder", "lathe", "anvil", "tongs",
        "mallet", "pickaxe", "sickle", "scythe", "wheelbarrow", "toolbox",
        "file", "awl", "plane", "level", "needle", "thimble", "loom",
    ],
    "instrument": [
        "guitar", "violin", "viola", "cello", "banjo", "mandolin", "ukulele",
        "harp", "piano", "organ", "accordion", "harmonica", "flute",
        "piccolo", "clarinet", "oboe", "bassoon", "saxophone", "trumpet",
        "trombone", "tuba", "horn", "drum", "cymbal", "tambourine",
        "xylophone", "marimba", "bell", "chime", "gong", "fiddle", "bagpipe",
        "lute", "lyre", "sitar", "bongo",
    ],
    "body_part": [
        "head", "face", "eye", "ear", "nose", "mouth", "lip", "tooth",
        "tongue", "chin", "cheek", "forehead", "eyebrow", "eyelash", "hair",
        "beard", "mustache", "neck", "throat", "shoulder", "arm", "elbow",
        "wrist", "hand", "finger", "thumb", "knuckle", "chest", "back",
        "spine", "waist", "hip", "leg", "knee", "ankle", "foot", "toe",
        "skin", "bone", "muscle", "heart", "lung", "liver", "kidney",
        "stomach", "brain", "rib", "jaw", "scalp", "palm",
    ],
    "plant": [
        "tree", "oak", "pine", "maple", "birch", "cedar", "willow", "elm",
        "beech", "spruce", "fir", "palm_tree", "bamboo", "fern", "moss",
        "grass", "flower", "rose", "tulip", "daisy", "lily", "orchid",
        "sunflower", "daffodil", "poppy", "lavender", "jasmine", "shrub",
        "bush", "hedge", "vine", "ivy", "cactus", "reed", "weed", "clover",
        "dandelion", "sapling", "seedling", "thistle", "acorn", "pinecone",
        "blossom", "petal", "stem", "root", "branch", "twig", "leaf",
        "trunk", "bark",
    ],
    "nature": [
        "rain", "snow", "hail", "sleet", "fog", "mist", "cloud", "storm",
        "thunder", "lightning", "wind", "breeze", "gale", "hurricane",
        "tornado", "drought", "flood", "rainbow", "frost", "dew", "sky",
        "sun", "moon", "star", "comet", "meteor", "planet", "mountain",
        "hill", "valley", "canyon", "cliff", "cave", "river", "stream",
        "creek", "lake", "pond", "ocean", "sea", "beach", "shore", "island",
        "desert", "forest", "jungle", "meadow", "field", "prairie", "swamp",
        "marsh", "glacier", "volcano", "dune", "lagoon", "reef", "horizon",
        "sunset", "sunrise", "dusk", "waterfall", "boulder", "pebble",
        "gravel", "sand", "mud", "dirt", "soil", "stone", "rock", "crystal",
        "iceberg", "tide", "wave", "current", "puddle", "ripple",
    ],
    "container": [
        "box", "crate", "barrel", "bucket", "basket", "bag", "sack",
        "pouch", "jar", "bottle", "tin", "jug", "pitcher", "vase", "pot",
        "pan", "bowl", "cup", "mug", "plate", "tray", "carton", "envelope",
        "folder", "suitcase", "backpack", "knapsack", "satchel", "wallet",
        "purse", "canteen", "flask", "thermos", "urn", "bin", "hamper",
        "casket", "chest_box", "keg", "vial",
    ],
    "appliance": [
        "stove", "oven", "microwave", "refrigerator", "freezer",
        "dishwasher", "toaster", "blender", "mixer", "kettle", "grill",
        "lamp", "fan", "heater", "radiator", "vacuum", "washer", "dryer",
        "television", "radio", "telephone", "clock", "camera", "computer",
        "laptop", "tablet", "printer", "speaker", "headphone", "charger",
        "router", "monitor", "projector", "thermostat", "humidifier",
    ],
    "profession": [
        "doctor", "nurse", "surgeon", "dentist", "teacher", "professor",
        "student", "lawyer", "judge", "farmer", "baker", "butcher", "chef",
        "cook", "waiter", "waitress", "barber", "tailor", "carpenter",
        "plumber", "electrician", "mechanic", "engineer", "architect",
        "pilot", "sailor", "soldier", "officer", "firefighter", "paramedic",
        "scientist", "chemist", "biologist", "artist", "painter",
        "sculptor", "musician", "singer", "dancer", "actor", "actress",
        "writer", "author", "poet", "journalist", "photographer",
        "librarian", "clerk", "cashier", "banker", "accountant", "manager",
        "secretary", "janitor", "gardener", "shepherd", "fisherman",
        "hunter", "miner", "blacksmith", "nun", "monk", "priest", "king",
        "queen", "prince", "princess", "knight", "wizard", "clown",
        "magician", "athlete", "coach", "referee", "captain",
    ],
    "sport": [
        "soccer", "football", "basketball", "baseball", "tennis", "golf",
        "hockey", "cricket_game", "rugby", "volleyball", "badminton",
        "boxing", "wrestling", "judo", "karate", "gymnastics", "swimming",
        "diving", "surfing", "skiing", "snowboarding", "skating", "cycling",
        "jogging", "hiking", "climbing", "archery", "bowling", "billiards",
        "darts", "chess", "marathon", "polo", "rowing", "fencing", "lacrosse",
    ],
    "toy": [
        "ball", "balloon", "doll", "puppet", "kite", "marble", "dice",
        "puzzle", "block", "crayon", "whistle", "robot", "teddy", "yoyo",
        "frisbee", "skateboard", "swing", "slide", "seesaw", "sandbox",
        "rattle", "pinwheel", "domino", "checkers", "hopscotch", "slinky",
    ],
}

# General nouns outside the category lexicon.
GENERAL_NOUNS = [
    "man", "woman", "boy", "girl", "child", "baby", "toddler", "teenager",
    "adult", "person", "people", "family", "crowd", "friend", "neighbor",
    "stranger", "guest", "couple", "lady", "gentleman", "mother", "father",
    "parent", "son", "daughter", "brother", "sister", "uncle", "aunt",
    "cousin", "grandmother", "grandfather", "twin", "book", "paper", "page",
    "pen", "pencil", "marker", "chalk", "eraser", "notebook", "journal",
    "magazine", "newspaper", "map", "poster", "card", "ticket", "stamp",
    "coin", "money", "door", "window", "wall", "floor", "ceiling", "roof",
    "chimney", "porch", "balcony", "stair", "staircase", "hallway", "room",
    "kitchen", "bathroom", "bedroom", "attic", "basement", "fence", "gate",
    "road", "street", "path", "sidewalk", "crosswalk", "corner", "curb",
    "alley", "avenue", "highway", "lane", "trail", "sign", "signal",
    "light", "candle", "lantern", "torch", "mirror", "picture", "painting",
    "photo", "photograph", "portrait", "frame", "rug", "carpet", "curtain",
    "pillow", "blanket", "quilt", "towel", "soap", "sponge", "key", "lock",
    "chain", "rope", "wire", "string", "thread", "ribbon", "button",
    "zipper", "pocket", "umbrella", "cane", "crutch", "flag", "banner",
    "tent", "campfire", "bonfire", "trap", "net", "hook", "anchor", "oar",
    "paddle", "sail", "mast", "wheel", "tire", "engine", "pedal", "handle",
    "knob", "switch", "plug", "cord", "battery", "magnet", "compass",
    "telescope", "microscope", "binoculars", "dial", "gauge", "meter",
    "scale", "weight", "spring", "gear", "bolt", "screw", "nail", "pin",
    "hinge", "bracket", "beam", "plank", "board", "log", "lumber", "brick",
    "tile", "cement", "concrete", "glass", "metal", "steel", "iron",
    "copper", "silver", "gold", "bronze", "plastic", "rubber", "leather",
    "wool", "cotton", "silk", "velvet", "denim", "canvas", "fabric",
    "cloth", "morning", "evening", "afternoon", "night", "midnight",
    "noon", "day", "week", "month", "year", "hour", "minute", "moment",
    "season", "spring_season", "summer", "autumn", "winter", "holiday",
    "birthday", "wedding", "party", "festival", "parade", "concert",
    "game", "match", "race", "journey", "trip", "vacation", "adventure",
    "picnic", "barbecue", "feast", "banquet", "ceremony", "meeting",
    "lesson", "class", "exam", "homework", "project", "job", "work",
    "task", "chore", "errand", "hobby", "craft", "art", "music", "song",
    "tune", "melody", "rhythm", "dance", "story", "tale", "poem", "joke",
    "riddle", "secret", "news", "letter", "message", "note", "word",
    "name", "number", "shape", "size", "edge", "center", "middle", "side",
    "top", "bottom", "front", "end", "beginning", "part", "piece", "slice",
    "chunk", "crumb", "drop", "splash", "stain", "spot", "stripe",
    "pattern", "dot", "line", "row", "column", "circle", "triangle",
    "rectangle", "cube", "sphere", "shadow", "reflection", "echo", "smoke",
    "flame", "spark", "ash", "dust", "fur", "feather", "tail", "paw",
    "claw", "hoof", "mane", "whisker", "beak", "wing", "fin", "scale_skin",
    "shell", "nest", "burrow", "den", "hive", "web", "cocoon", "egg",
    "footprint", "track", "herd", "flock", "pack", "litter", "saddle",
    "bridle", "leash", "collar", "kennel", "stable", "pasture", "fencepost",
    "trough", "haystack", "scarecrow", "orchard", "vineyard", "garden",
    "lawn", "yard", "park", "playground", "plaza", "square_place", "bazaar",
    "booth", "stall", "counter", "aisle", "cart_shop", "basket_shop",
]

VERBS = [
    "sit", "stand", "walk", "run", "jump", "leap", "hop", "skip", "climb",
    "crawl", "swim", "dive", "fly", "float", "drift", "sail", "drive",
    "ride", "pull", "push", "carry", "lift", "drop", "toss", "throw",
    "catch", "kick", "hit", "strike", "punch", "slap", "grab", "hold",
    "release", "open", "close", "shut", "lock", "unlock", "enter", "exit",
    "leave", "arrive", "stay", "wait", "watch", "look", "see", "stare",
    "glance", "gaze", "observe", "peek", "read", "write", "draw", "paint",
    "sketch", "doodle", "sing", "hum", "dance", "perform", "juggle",
    "cook", "bake", "fry", "boil", "roast", "simmer", "slice", "chop",
    "cut", "carve", "peel", "grate", "stir", "whisk", "mix", "blend",
    "pour", "drink", "sip", "gulp", "eat", "bite", "chew", "swallow",
    "nibble", "taste", "smell", "sniff", "touch", "feel", "hear", "listen",
    "speak", "talk", "chat", "shout", "yell", "whisper", "mumble", "laugh",
    "giggle", "chuckle", "smile", "grin", "frown", "cry", "weep", "sob",
    "sleep", "nap", "doze", "rest", "wake", "dream", "think", "ponder",
    "wonder", "know", "learn", "teach", "study", "practice", "count",
    "measure", "weigh", "build", "construct", "assemble", "repair", "mend",
    "fix", "break", "smash", "crush", "shatter", "crack", "tear", "rip",
    "bend", "fold", "wrap", "unwrap", "tie", "untie", "knit", "sew",
    "weave", "stitch", "wash", "rinse", "scrub", "sweep", "mop", "wipe",
    "polish", "shine", "wear", "dress", "undress", "buy", "sell", "pay",
    "trade", "swap", "give", "take", "borrow", "lend", "send", "receive",
    "deliver", "pack", "unpack", "load", "unload", "fill", "empty",
    "harvest", "gather", "collect", "pick", "pluck", "dig", "bury",
    "plant_seed", "sow", "mow", "prune", "trim", "shave", "comb", "braid",
    "stroke", "pet", "feed", "graze", "hunt", "chase", "follow", "lead",
    "guide", "point", "wave", "nod", "bow", "kneel", "squat", "stretch",
    "lean", "balance", "hang", "dangle", "spin", "twirl", "roll", "slide_move",
    "glide", "skid", "march", "stroll", "wander", "roam", "hike", "jog",
    "sprint", "gallop", "trot", "prance", "race_move", "travel", "explore",
    "visit", "greet", "welcome", "hug", "kiss", "shake", "clap", "cheer",
    "applaud", "whistle_sound", "snore", "yawn", "sneeze", "cough", "blink",
    "wink", "breathe", "pant", "shiver", "tremble", "sweat", "splash",
    "spray", "squirt", "drip", "leak", "flow", "gush", "soak", "dunk",
    "plunge", "sink", "rise", "lower", "raise", "toss_up", "flip", "turn",
    "twist", "rotate", "swing_move", "sway", "rock_move", "bounce", "vault",
    "tumble", "stumble", "trip_fall", "fall", "land", "launch", "steer",
    "park_car", "reverse", "accelerate", "brake", "honk", "signal_turn",
    "paddle_boat", "row_boat", "anchor_boat", "moor", "fish_catch", "reel",
    "cast_line", "camp", "climb_up", "descend", "ascend", "slip",
]

ADJECTIVES = [
    "red", "blue", "green", "yellow", "purple", "pink", "brown", "black",
    "white", "gray", "golden", "beige", "maroon", "crimson", "scarlet",
    "turquoise", "teal", "navy", "ivory", "amber", "violet_color", "indigo",
    "magenta", "tan", "big", "small", "large", "little", "tiny", "huge",
    "giant", "enormous", "massive", "vast", "wide", "narrow", "thin",
    "thick", "broad", "deep", "shallow", "tall", "short", "long", "brief",
    "old", "young", "new", "ancient", "modern", "fresh", "stale", "clean",
    "dirty", "neat", "messy", "tidy", "rough", "smooth", "soft", "hard",
    "firm", "gentle", "sharp", "dull", "bright", "dark", "dim", "pale",
    "vivid", "shiny", "glossy", "matte", "wet", "dry", "damp", "moist",
    "soggy", "hot", "cold", "warm", "cool", "freezing", "frozen", "boiling",
    "fast", "slow", "quick", "rapid", "quiet", "loud", "noisy", "silent",
    "calm", "peaceful", "busy", "crowded", "empty", "full", "hollow",
    "solid", "dense", "sparse", "happy", "sad", "angry", "cheerful",
    "gloomy", "tired", "sleepy", "awake", "alert", "brave", "timid", "shy",
    "bold", "proud", "humble", "kind", "cruel", "friendly", "fierce",
    "wild", "tame", "polite", "rude", "smart", "clever", "wise", "foolish",
    "silly", "funny", "serious", "strange", "odd", "curious", "common",
    "rare", "unique", "plain", "fancy", "elegant", "graceful", "clumsy",
    "awkward", "strong", "weak", "sturdy", "fragile", "delicate", "tough",
    "rich", "poor", "expensive", "cheap", "valuable", "beautiful",
    "pretty", "handsome", "ugly", "lovely", "charming", "pleasant",
    "nasty", "sweet", "sour", "bitter", "salty", "spicy", "bland", "tasty",
    "delicious", "ripe", "rotten", "crisp", "crunchy", "chewy", "tender",
    "juicy", "round", "oval", "flat", "curved", "straight", "crooked",
    "bent", "twisted", "pointed", "blunt", "hairy", "furry", "fluffy",
    "fuzzy", "feathered", "scaly", "striped", "spotted", "checkered",
    "floral", "wooden", "metallic", "woolen", "rusty", "dusty", "muddy",
    "sandy", "grassy", "rocky", "icy", "snowy", "foggy", "misty", "cloudy",
    "sunny", "rainy", "windy", "stormy", "breezy", "humid", "lush",
    "barren", "steep", "rugged", "gigantic", "miniature", "slender",
    "plump", "chubby", "skinny", "lean_thin", "muscular", "bald", "curly",
    "wavy", "braided", "tangled", "glowing", "sparkling", "gleaming",
    "faded", "worn", "torn", "patched", "ragged", "crumpled", "wrinkled",
    "smooth_flat", "polished", "painted", "carved", "woven", "knitted",
    "embroidered", "vintage", "antique", "cozy", "snug", "spacious",
    "cramped", "distant", "nearby", "remote", "hidden", "visible", "blurry",
]

DETERMINERS = [
    "a", "an", "the", "this", "that", "these", "those", "my", "your",
    "his", "her", "its", "our", "their", "some", "any", "no", "every",
    "each", "either", "neither", "few", "several", "many", "much", "more",
    "most", "other", "another", "such", "what", "which", "whose", "all",
    "both", "half", "enough",
]

PREPOSITIONS = [
    "in", "on", "at", "by", "for", "with", "without", "about", "above",
    "below", "under", "over", "between", "among", "through", "during",
    "before", "after", "behind", "beside", "near", "beneath", "along",
    "across", "toward", "towards", "against", "around", "from", "to",
    "of", "off", "onto", "into", "upon", "within", "outside", "inside",
    "up", "down", "past", "beyond", "via", "amid", "atop", "underneath",
    "throughout", "alongside",
]

PRONOUNS = [
    "i", "you", "he", "she", "it", "we", "they", "me", "him", "them",
    "us", "mine", "yours", "hers", "ours", "theirs", "myself", "yourself",
    "himself", "herself", "itself", "ourselves", "themselves", "who",
    "whom", "whoever", "something", "anything", "nothing", "everything",
    "someone", "anyone", "everyone", "nobody", "somebody", "anybody",
    "everybody",
]

# Auxiliaries, conjunctions, and frequent adverbs: tagged OTHER, never heads.
FUNCTION_WORDS = [
    "is", "am", "are", "was", "were", "be", "been", "being", "have",
    "has", "had", "do", "does", "did", "will", "would", "shall", "should",
    "can", "could", "may", "might", "must", "and", "or", "but", "nor",
    "so", "yet", "if", "then", "else", "when", "while", "although",
    "because", "since", "unless", "until", "whether", "not", "never",
    "always", "often", "sometimes", "usually", "rarely", "very", "too",
    "quite", "rather", "almost", "just", "only", "even", "still", "also",
    "perhaps", "maybe", "here", "there", "now", "today", "yesterday",
    "tomorrow", "again", "once", "twice", "soon", "already", "together",
    "apart", "away", "back", "forward", "nearby_adv", "far", "close",
]

# Words spelled with an underscore are disambiguation aliases: the part
# before the underscore is the actual surface form. alias() resolves them.


def alias(word: str) -> str:
    """Resolve a disambiguation alias to its surface form."""
    return word.split("_", 1)[0]


def surface_set(words) -> list:
    """Resolved, deduplicated, order-preserving surface forms."""
    seen = set()
    out = []
    for w in words:
        s = alias(w)
        if s not in seen:
            seen.add(s)
            out.append(s)
    return out


IRREGULAR_PLURALS = {
    "man": "men", "woman": "women", "child": "children", "person": "people",
    "mouse": "mice", "goose": "geese", "tooth": "teeth", "foot": "feet",
    "sheep": "sheep", "deer": "deer", "ox": "oxen", "leaf": "leaves",
    "wolf": "wolves", "knife": "knives", "life": "lives", "shelf": "shelves",
    "loaf": "loaves", "calf": "calves", "half": "halves", "thief": "thieves",
    "wife": "wives", "die": "dice", "cactus": "cacti", "octopus": "octopuses",
}

IRREGULAR_PASTS = {
    "sit": "sat", "stand": "stood", "run": "ran", "swim": "swam",
    "dive": "dove", "fly": "flew", "drive": "drove", "ride": "rode",
    "throw": "threw", "catch": "caught", "hit": "hit", "strike": "struck",
    "hold": "held", "leave": "left", "see": "saw", "read": "read",
    "write": "wrote", "draw": "drew", "sing": "sang", "eat": "ate",
    "bite": "bit", "drink": "drank", "hear": "heard", "speak": "spoke",
    "sleep": "slept", "wake": "woke", "think": "thought", "know": "knew",
    "teach": "taught", "build": "built", "break": "broke", "tear": "tore",
    "bend": "bent", "knit": "knit", "sew": "sewed", "wear": "wore",
    "buy": "bought", "sell": "sold", "pay": "paid", "give": "gave",
    "take": "took", "send": "sent", "dig": "dug", "lead": "led",
    "kneel": "knelt", "hang": "hung", "spin": "spun", "fall": "fell",
    "rise": "rose", "sink": "sank", "shake": "shook", "sweep": "swept",
    "cut": "cut", "shut": "shut",
}
